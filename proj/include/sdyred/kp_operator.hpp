#pragma once

#include <optional>
#include <vector>

#include "sdyred/calculus.hpp"
#include "sdyred/equations.hpp"
#include "sdyred/report.hpp"

namespace sdyred {

// Scalar differential operator  sum_j c_j(x, y) d_x^j.
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(std::vector<ScalarField> coeffs);
  static DiffOp multiplication(const ScalarField& f);
  static DiffOp dx_power(const Grid& g, int order);

  const Grid& grid() const { return c_.front().grid(); }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const ScalarField& coeff(int j) const { return c_.at(static_cast<size_t>(j)); }
  const std::vector<ScalarField>& coeffs() const { return c_; }

  // Applies the operator to a function.
  ScalarField apply(const ScalarField& f, DiffMethod method = DiffMethod::spectral) const;

 private:
  std::vector<ScalarField> c_;
};

DiffOp operator+(const DiffOp& a, const DiffOp& b);
DiffOp operator-(const DiffOp& a, const DiffOp& b);
DiffOp operator*(cplx s, const DiffOp& a);
// Operator product a o b, expanded with the Leibniz rule.
DiffOp compose(const DiffOp& a, const DiffOp& b, DiffMethod method = DiffMethod::spectral);
DiffOp commutator(const DiffOp& a, const DiffOp& b, DiffMethod method = DiffMethod::spectral);
// Coefficient-wise partial derivative along a grid axis.
DiffOp derivative(const DiffOp& a, int axis, DiffMethod method = DiffMethod::spectral);

// Psi_y = A Psi, Psi_t = B Psi with
//   A = -(d^2 + k) / alpha,  B = -(4 d^3 + 6 k d + 3 (k_x - alpha m3)).
struct KpLaxPair {
  DiffOp a, b;
  std::optional<DiffOp> a_t;
  double alpha = 1.0;
};

KpLaxPair build_kp_lax(const ScalarField& k, const ScalarField& m3, double alpha,
                       const std::optional<ScalarField>& k_t = std::nullopt,
                       DiffMethod method = DiffMethod::spectral);
// A_t - B_y + [A, B].
DiffOp kp_zero_curvature(const KpLaxPair& p, DiffMethod method = DiffMethod::spectral);

// Compares each d^j coefficient with its combination of the KP residuals
// R_k (evolution) and R_m (constraint):
//   d^1: -6 R_m,  d^0: -R_k / alpha - 3 (R_m)_x,  higher orders: 0.
// Fields: k, m3, k_t.
ResidualReport kp_lax_check(const FieldMap& fields, double alpha, double tolerance = 1e-9,
                            DiffMethod method = DiffMethod::spectral);

}  // namespace sdyred
