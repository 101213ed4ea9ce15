#include "sdyred/grid.hpp"

#include <cmath>
#include <sstream>

#include "sdyred/errors.hpp"

namespace sdyred {

Grid::Grid(std::vector<int> sizes, std::vector<double> lengths)
    : ndim_(static_cast<int>(sizes.size())), sizes_(std::move(sizes)), lengths_(std::move(lengths)) {
  if (ndim_ < 1 || ndim_ > 3) throw DimensionError("grid must have 1 to 3 axes");
  if (lengths_.size() != sizes_.size()) throw DimensionError("grid sizes and lengths differ in count");
  for (int n : sizes_)
    if (n < 8) throw PreconditionError("grid axes need at least 8 points");
  for (double l : lengths_)
    if (!(l > 0.0) || !std::isfinite(l)) throw PreconditionError("grid lengths must be positive");
  strides_.assign(sizes_.size(), 1);
  for (int a = ndim_ - 2; a >= 0; --a)
    strides_[static_cast<size_t>(a)] = strides_[static_cast<size_t>(a + 1)] * static_cast<size_t>(sizes_[static_cast<size_t>(a + 1)]);
  points_ = strides_[0] * static_cast<size_t>(sizes_[0]);
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < ndim_; ++a) v *= spacing(a);
  return v;
}

std::string Grid::describe() const {
  std::ostringstream os;
  for (int a = 0; a < ndim_; ++a) os << (a ? "x" : "") << sizes_[static_cast<size_t>(a)];
  return os.str();
}

void require_same_grid(const Grid& a, const Grid& b, const char* context) {
  if (a != b) throw DimensionError(std::string(context) + ": grids differ (" + a.describe() + " vs " + b.describe() + ")");
}

}  // namespace sdyred
