#include "sdyred/lambda_field.hpp"

#include <algorithm>

#include "sdyred/errors.hpp"

namespace sdyred {

LambdaMatrixField::LambdaMatrixField(const Grid& grid, int dim) : c_{MatrixField(grid, dim)} {}

LambdaMatrixField::LambdaMatrixField(std::vector<MatrixField> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw DimensionError("lambda field needs at least one coefficient");
  for (const auto& m : c_) {
    require_same_grid(m.grid(), c_.front().grid(), "lambda field");
    if (m.dim() != c_.front().dim()) throw DimensionError("lambda field coefficients differ in dimension");
  }
}

LambdaMatrixField LambdaMatrixField::pencil(const MatrixField& a, const MatrixField& b) {
  return LambdaMatrixField({a, -b});
}

LambdaMatrix LambdaMatrixField::at(std::size_t point) const {
  std::vector<ComplexMatrix> m;
  for (const auto& c : c_) m.push_back(c.at(point));
  return LambdaMatrix(std::move(m));
}

MatrixField LambdaMatrixField::evaluate(cplx lambda) const {
  MatrixField acc = c_.back();
  for (int k = degree() - 1; k >= 0; --k) acc = lambda * acc + c_[static_cast<size_t>(k)];
  return acc;
}

namespace {

std::vector<MatrixField> zeros(const Grid& g, int dim, int degree) {
  return std::vector<MatrixField>(static_cast<size_t>(degree + 1), MatrixField(g, dim));
}

}  // namespace

LambdaMatrixField operator+(const LambdaMatrixField& a, const LambdaMatrixField& b) {
  auto c = zeros(a.grid(), a.dim(), std::max(a.degree(), b.degree()));
  for (int k = 0; k <= a.degree(); ++k) c[static_cast<size_t>(k)] += a.coeff(k);
  for (int k = 0; k <= b.degree(); ++k) c[static_cast<size_t>(k)] += b.coeff(k);
  return LambdaMatrixField(std::move(c));
}

LambdaMatrixField operator*(cplx s, const LambdaMatrixField& a) {
  auto c = a.coeffs();
  for (auto& m : c) m *= s;
  return LambdaMatrixField(std::move(c));
}

LambdaMatrixField operator-(const LambdaMatrixField& a, const LambdaMatrixField& b) { return a + (-1.0) * b; }

LambdaMatrixField operator*(const ScalarPoly& s, const LambdaMatrixField& a) {
  if (s.empty()) return LambdaMatrixField(a.grid(), a.dim());
  auto c = zeros(a.grid(), a.dim(), static_cast<int>(s.size()) - 1 + a.degree());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == cplx{}) continue;
    for (int j = 0; j <= a.degree(); ++j) c[i + static_cast<size_t>(j)] += s[i] * a.coeff(j);
  }
  return LambdaMatrixField(std::move(c));
}

LambdaMatrixField operator*(const LambdaMatrixField& a, const LambdaMatrixField& b) {
  auto c = zeros(a.grid(), a.dim(), a.degree() + b.degree());
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  return LambdaMatrixField(std::move(c));
}

LambdaMatrixField commutator(const LambdaMatrixField& a, const LambdaMatrixField& b) {
  auto c = zeros(a.grid(), a.dim(), a.degree() + b.degree());
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) c[static_cast<size_t>(i + j)] += commutator(a.coeff(i), b.coeff(j));
  return LambdaMatrixField(std::move(c));
}

LambdaMatrixField derivative(const LambdaMatrixField& f, int axis, DiffMethod method) {
  std::vector<MatrixField> c;
  for (const auto& m : f.coeffs()) c.push_back(derivative(m, axis, method));
  return LambdaMatrixField(std::move(c));
}

}  // namespace sdyred
