#pragma once

#include <vector>

#include "sdyred/complex_matrix.hpp"

namespace sdyred {

// Matrix polynomial in the spectral parameter: sum_k coeffs[k] * lambda^k.
class LambdaMatrix {
 public:
  LambdaMatrix() = default;
  explicit LambdaMatrix(int dim);  // the zero polynomial, degree 0
  explicit LambdaMatrix(std::vector<ComplexMatrix> coeffs);
  static LambdaMatrix constant(const ComplexMatrix& m) { return LambdaMatrix({m}); }
  static LambdaMatrix monomial(const ComplexMatrix& m, int power);

  int dim() const { return dim_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<ComplexMatrix>& coeffs() const { return c_; }
  const ComplexMatrix& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }

  // Drops zero leading coefficients (keeps at least the constant term).
  LambdaMatrix& normalize();

 private:
  int dim_ = 0;
  std::vector<ComplexMatrix> c_;
};

LambdaMatrix operator+(const LambdaMatrix& a, const LambdaMatrix& b);
LambdaMatrix operator-(const LambdaMatrix& a, const LambdaMatrix& b);
LambdaMatrix operator*(const LambdaMatrix& a, const LambdaMatrix& b);
LambdaMatrix operator*(cplx s, const LambdaMatrix& a);
LambdaMatrix commutator(const LambdaMatrix& a, const LambdaMatrix& b);
ComplexMatrix evaluate(const LambdaMatrix& a, cplx lambda);

}  // namespace sdyred
