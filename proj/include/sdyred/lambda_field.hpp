#pragma once

#include <vector>

#include "sdyred/calculus.hpp"
#include "sdyred/field.hpp"
#include "sdyred/lambda_matrix.hpp"

namespace sdyred {

// Scalar polynomial in lambda with constant coefficients; poly[k] multiplies lambda^k.
using ScalarPoly = std::vector<cplx>;

// Matrix field whose entries are polynomials in lambda: sum_k coeff(k) * lambda^k.
class LambdaMatrixField {
 public:
  LambdaMatrixField() = default;
  LambdaMatrixField(const Grid& grid, int dim);  // zero polynomial
  explicit LambdaMatrixField(std::vector<MatrixField> coeffs);
  static LambdaMatrixField constant(const MatrixField& m) { return LambdaMatrixField({m}); }
  // a - lambda * b
  static LambdaMatrixField pencil(const MatrixField& a, const MatrixField& b);

  const Grid& grid() const { return c_.front().grid(); }
  int dim() const { return c_.front().dim(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const MatrixField& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
  MatrixField& coeff(int k) { return c_.at(static_cast<size_t>(k)); }
  const std::vector<MatrixField>& coeffs() const { return c_; }

  LambdaMatrix at(std::size_t point) const;
  MatrixField evaluate(cplx lambda) const;

 private:
  std::vector<MatrixField> c_;
};

LambdaMatrixField operator+(const LambdaMatrixField& a, const LambdaMatrixField& b);
LambdaMatrixField operator-(const LambdaMatrixField& a, const LambdaMatrixField& b);
LambdaMatrixField operator*(cplx s, const LambdaMatrixField& a);
LambdaMatrixField operator*(const ScalarPoly& s, const LambdaMatrixField& a);
LambdaMatrixField operator*(const LambdaMatrixField& a, const LambdaMatrixField& b);
LambdaMatrixField commutator(const LambdaMatrixField& a, const LambdaMatrixField& b);
LambdaMatrixField derivative(const LambdaMatrixField& f, int axis, DiffMethod method = DiffMethod::spectral);

}  // namespace sdyred
