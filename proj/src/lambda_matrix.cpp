#include "sdyred/lambda_matrix.hpp"

#include <algorithm>
#include <string>

#include "sdyred/errors.hpp"

namespace sdyred {

LambdaMatrix::LambdaMatrix(int dim) : dim_(dim), c_{ComplexMatrix(dim)} {}

LambdaMatrix::LambdaMatrix(std::vector<ComplexMatrix> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw DimensionError("lambda polynomial needs at least one coefficient");
  dim_ = c_.front().dim();
  for (const auto& m : c_)
    if (m.dim() != dim_) throw DimensionError("lambda polynomial coefficients differ in dimension");
}

LambdaMatrix LambdaMatrix::monomial(const ComplexMatrix& m, int power) {
  std::vector<ComplexMatrix> c(static_cast<size_t>(power + 1), ComplexMatrix(m.dim()));
  c.back() = m;
  return LambdaMatrix(std::move(c));
}

LambdaMatrix& LambdaMatrix::normalize() {
  while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
  return *this;
}

static void check_dims(const LambdaMatrix& a, const LambdaMatrix& b) {
  if (a.dim() != b.dim())
    throw DimensionError("lambda matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
}

LambdaMatrix operator+(const LambdaMatrix& a, const LambdaMatrix& b) {
  check_dims(a, b);
  const int deg = std::max(a.degree(), b.degree());
  std::vector<ComplexMatrix> c(static_cast<size_t>(deg + 1), ComplexMatrix(a.dim()));
  for (int k = 0; k <= a.degree(); ++k) c[static_cast<size_t>(k)] += a.coeff(k);
  for (int k = 0; k <= b.degree(); ++k) c[static_cast<size_t>(k)] += b.coeff(k);
  return LambdaMatrix(std::move(c));
}

LambdaMatrix operator*(cplx s, const LambdaMatrix& a) {
  std::vector<ComplexMatrix> c = a.coeffs();
  for (auto& m : c) m *= s;
  return LambdaMatrix(std::move(c));
}

LambdaMatrix operator-(const LambdaMatrix& a, const LambdaMatrix& b) { return a + (-1.0) * b; }

LambdaMatrix operator*(const LambdaMatrix& a, const LambdaMatrix& b) {
  check_dims(a, b);
  std::vector<ComplexMatrix> c(static_cast<size_t>(a.degree() + b.degree() + 1), ComplexMatrix(a.dim()));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  return LambdaMatrix(std::move(c));
}

LambdaMatrix commutator(const LambdaMatrix& a, const LambdaMatrix& b) {
  check_dims(a, b);
  // Terms of each power are summed in mirrored pairs (i, k-i) so that the
  // result is bitwise the negation of commutator(b, a).
  const int top = a.degree() + b.degree();
  std::vector<ComplexMatrix> c(static_cast<size_t>(top + 1), ComplexMatrix(a.dim()));
  auto term = [&](int i, int k) -> ComplexMatrix {
    if (i > a.degree() || k - i > b.degree() || k - i < 0) return ComplexMatrix(a.dim());
    return commutator(a.coeff(i), b.coeff(k - i));
  };
  for (int k = 0; k <= top; ++k) {
    for (int i = 0; 2 * i <= k; ++i) {
      if (2 * i == k) c[static_cast<size_t>(k)] += term(i, k);
      else c[static_cast<size_t>(k)] += term(i, k) + term(k - i, k);
    }
  }
  return LambdaMatrix(std::move(c));
}

ComplexMatrix evaluate(const LambdaMatrix& a, cplx lambda) {
  ComplexMatrix acc = a.coeff(a.degree());
  for (int k = a.degree() - 1; k >= 0; --k) acc = lambda * acc + a.coeff(k);
  return acc;
}

}  // namespace sdyred
