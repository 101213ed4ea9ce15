#pragma once

#include <string>
#include <vector>

#include "sdyred/complex_matrix.hpp"
#include "sdyred/report.hpp"

namespace sdyred {

// Closed tensor-product sample window (endpoints included, not periodic).
class Window {
 public:
  Window(std::vector<double> lo, std::vector<double> hi, std::vector<int> n);

  int ndim() const { return static_cast<int>(n_.size()); }
  int size(int axis) const { return n_.at(static_cast<size_t>(axis)); }
  double lo(int axis) const { return lo_.at(static_cast<size_t>(axis)); }
  double hi(int axis) const { return hi_.at(static_cast<size_t>(axis)); }
  double spacing(int axis) const { return (hi(axis) - lo(axis)) / (size(axis) - 1); }
  double coord(int axis, int i) const { return lo(axis) + spacing(axis) * i; }
  std::size_t points() const { return points_; }
  std::size_t stride(int axis) const { return stride_.at(static_cast<size_t>(axis)); }
  int index_along(std::size_t flat, int axis) const {
    return static_cast<int>((flat / stride(axis)) % static_cast<std::size_t>(size(axis)));
  }
  std::vector<double> point(std::size_t flat) const;

 private:
  std::vector<double> lo_, hi_;
  std::vector<int> n_;
  std::vector<std::size_t> stride_;
  std::size_t points_ = 1;
};

enum class NonisoVariant {
  four_coordinate,  // coordinates (xi1, xi2, xi3, xi4)
  xyt,              // coordinates (x, y, t)
};
NonisoVariant parse_noniso_variant(const std::string& s);
const char* to_string(NonisoVariant v);

struct LambdaParams {
  double n1 = 0.0, n3 = 0.0, n4 = 1.0;
  double m1 = 0.0, m3c = 0.0, m4 = 0.0;
};

// lambda = N / D with
//   four_coordinate: N = n1 xi3 + m1 xi4 + n3 + m3c,  D = n4 + m4 - n1 xi1 - m1 xi2
//   xyt:             N = n1 y + n3,                   D = n4 - n1 t
double lambda_value(const LambdaParams& p, NonisoVariant v, const std::vector<double>& coords);
// Analytic gradient of lambda with respect to every coordinate.
std::vector<double> lambda_gradient(const LambdaParams& p, NonisoVariant v, const std::vector<double>& coords);

struct LambdaField {
  Window window;
  NonisoVariant variant;
  LambdaParams params;
  std::vector<cplx> values;
};

// Samples lambda; throws PreconditionError if the affine denominator vanishes
// or changes sign on the window.
LambdaField lambda_field(const LambdaParams& p, const Window& w, NonisoVariant v);

enum class NonisoDerivative { analytic, finite_difference };

// four_coordinate: "xi1-xi3" (lambda_xi1 vs lambda lambda_xi3) and "xi2-xi4".
// xyt:             "x" (lambda_x vs 0) and "t-y" (lambda_t vs lambda lambda_y).
// Finite differences are fourth-order central and evaluated at interior points.
ResidualReport nonisospectral_residual(const LambdaField& lf, NonisoDerivative d = NonisoDerivative::analytic,
                                       double tolerance = 1e-12);

}  // namespace sdyred
