#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace sdyred {

// Uniform periodic grid in 1-3 dimensions. Axis 0 is x, axis 1 is y, axis 2
// is an auxiliary coordinate. Storage is row-major with axis 0 slowest.
class Grid {
 public:
  Grid() = default;
  Grid(std::vector<int> sizes, std::vector<double> lengths);

  static Grid line(int n, double length) { return Grid({n}, {length}); }
  static Grid plane(int nx, int ny, double lx, double ly) { return Grid({nx, ny}, {lx, ly}); }
  static Grid box(int n0, int n1, int n2, double l0, double l1, double l2) {
    return Grid({n0, n1, n2}, {l0, l1, l2});
  }

  int ndim() const { return ndim_; }
  int size(int axis) const { return sizes_.at(static_cast<size_t>(axis)); }
  double length(int axis) const { return lengths_.at(static_cast<size_t>(axis)); }
  double spacing(int axis) const { return length(axis) / size(axis); }
  std::size_t points() const { return points_; }
  std::size_t stride(int axis) const { return strides_.at(static_cast<size_t>(axis)); }
  double cell_volume() const;
  const std::vector<int>& sizes() const { return sizes_; }
  const std::vector<double>& lengths() const { return lengths_; }

  // Coordinate of sample i along an axis (origin at 0).
  double coord(int axis, int i) const { return spacing(axis) * i; }
  // Per-axis sample index of a flat index.
  int index_along(std::size_t flat, int axis) const {
    return static_cast<int>((flat / stride(axis)) % static_cast<std::size_t>(size(axis)));
  }

  bool operator==(const Grid& o) const { return sizes_ == o.sizes_ && lengths_ == o.lengths_; }
  bool operator!=(const Grid& o) const { return !(*this == o); }
  std::string describe() const;

 private:
  int ndim_ = 0;
  std::vector<int> sizes_;
  std::vector<double> lengths_;
  std::vector<std::size_t> strides_;
  std::size_t points_ = 0;
};

void require_same_grid(const Grid& a, const Grid& b, const char* context);

}  // namespace sdyred
