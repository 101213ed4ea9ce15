#include "sdyred/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sdyred/errors.hpp"

namespace sdyred {

const char* to_string(LieTag tag) {
  switch (tag) {
    case LieTag::none: return "none";
    case LieTag::su2: return "su2";
    case LieTag::sl2: return "sl2";
    case LieTag::so3: return "so3";
    case LieTag::so3c: return "so3c";
  }
  return "?";
}

ComplexMatrix::ComplexMatrix(int dim, LieTag tag) : dim_(dim), tag_(tag) {
  if (dim < 2 || dim > max_dim) throw DimensionError("matrix dimension out of range: " + std::to_string(dim));
  a_.assign(static_cast<size_t>(dim * dim), cplx{});
}

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<cplx> row_major, LieTag tag)
    : ComplexMatrix(dim, tag) {
  if (row_major.size() != a_.size()) throw DimensionError("entry count does not match dimension");
  std::copy(row_major.begin(), row_major.end(), a_.begin());
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d) {
  ComplexMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
  return m;
}

static void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw DimensionError("matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_dim(*this, o);
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  if (tag_ != o.tag_) tag_ = LieTag::none;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_dim(*this, o);
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  if (tag_ != o.tag_) tag_ = LieTag::none;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& x : a_) x *= s;
  // Real scalings preserve every tag; complex ones only the complexified ones.
  if (s.imag() != 0.0) {
    if (tag_ == LieTag::su2) tag_ = LieTag::sl2;
    if (tag_ == LieTag::so3) tag_ = LieTag::so3c;
  }
  return *this;
}

bool ComplexMatrix::is_diagonal() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (i != j && (*this)(i, j) != cplx{}) return false;
  return true;
}

bool ComplexMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](cplx x) { return x == cplx{}; });
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](cplx x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  ComplexMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c = a * b - b * a;
  if (a.tag() == b.tag()) c.set_tag(a.tag());
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c(i, j) = std::conj(a(j, i));
  return c;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c(i, j) = a(j, i);
  return c;
}

ComplexMatrix conj(const ComplexMatrix& a) {
  ComplexMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c(i, j) = std::conj(a(i, j));
  return c;
}

cplx trace(const ComplexMatrix& a) {
  cplx t{};
  for (int i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (cplx x : a.data()) s += std::norm(x);
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (cplx x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

namespace {

// LU with partial pivoting; returns false on an exactly singular pivot.
bool lu_decompose(ComplexMatrix& m, std::vector<int>& perm, int& sign) {
  const int n = m.dim();
  perm.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  sign = 1;
  const double scale = std::max(max_abs(m), 1e-300);
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
    if (std::abs(m(p, k)) <= 1e-14 * scale) return false;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      std::swap(perm[static_cast<size_t>(k)], perm[static_cast<size_t>(p)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      m(i, k) /= m(k, k);
      for (int j = k + 1; j < n; ++j) m(i, j) -= m(i, k) * m(k, j);
    }
  }
  return true;
}

}  // namespace

cplx determinant(const ComplexMatrix& a) {
  ComplexMatrix m = a;
  std::vector<int> perm;
  int sign = 1;
  if (!lu_decompose(m, perm, sign)) return cplx{};
  cplx d = static_cast<double>(sign);
  for (int i = 0; i < m.dim(); ++i) d *= m(i, i);
  return d;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix m = a;
  std::vector<int> perm;
  int sign = 1;
  if (!lu_decompose(m, perm, sign)) throw NumericalError("singular matrix");
  ComplexMatrix inv(n);
  for (int col = 0; col < n; ++col) {
    std::vector<cplx> x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      cplx s = perm[static_cast<size_t>(i)] == col ? 1.0 : 0.0;
      for (int j = 0; j < i; ++j) s -= m(i, j) * x[static_cast<size_t>(j)];
      x[static_cast<size_t>(i)] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
      cplx s = x[static_cast<size_t>(i)];
      for (int j = i + 1; j < n; ++j) s -= m(i, j) * x[static_cast<size_t>(j)];
      x[static_cast<size_t>(i)] = s / m(i, i);
    }
    for (int i = 0; i < n; ++i) inv(i, col) = x[static_cast<size_t>(i)];
  }
  return inv;
}

ComplexMatrix matrix_exp(const ComplexMatrix& a) {
  if (!a.all_finite()) throw PreconditionError("matrix_exp: non-finite entries");
  const int n = a.dim();
  if (a.is_diagonal()) {
    ComplexMatrix d(n);
    for (int i = 0; i < n; ++i) d(i, i) = std::exp(a(i, i));
    return d;
  }
  // Scale so the 1-norm is below 1/2, sum the Taylor series, square back.
  double norm1 = 0.0;
  for (int j = 0; j < n; ++j) {
    double col = 0.0;
    for (int i = 0; i < n; ++i) col += std::abs(a(i, j));
    norm1 = std::max(norm1, col);
  }
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  constexpr int max_squarings = 64;
  if (squarings > max_squarings) throw NumericalError("matrix_exp: scaling exceeds iteration cap");
  const ComplexMatrix scaled = std::ldexp(1.0, -squarings) * a;

  ComplexMatrix sum = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  constexpr int max_terms = 40;
  bool converged = false;
  for (int k = 1; k <= max_terms; ++k) {
    term = term * scaled;
    term *= 1.0 / k;
    sum += term;
    if (max_abs(term) <= 1e-18 * max_abs(sum)) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NumericalError("matrix_exp: Taylor series did not converge");
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  sum.set_tag(LieTag::none);
  return sum;
}

double tag_violation(const ComplexMatrix& a, LieTag tag) {
  const int n = a.dim();
  double v = 0.0;
  switch (tag) {
    case LieTag::none:
      return 0.0;
    case LieTag::su2:
      if (n != 2) return INFINITY;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v = std::max(v, std::abs(a(i, j) + std::conj(a(j, i))));
      return std::max(v, std::abs(trace(a)));
    case LieTag::sl2:
      if (n != 2) return INFINITY;
      return std::abs(trace(a));
    case LieTag::so3:
      if (n != 3) return INFINITY;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v = std::max({v, std::abs(a(i, j) + a(j, i)), std::abs(a(i, j).imag())});
      return v;
    case LieTag::so3c:
      if (n != 3) return INFINITY;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v = std::max(v, std::abs(a(i, j) + a(j, i)));
      return v;
  }
  return INFINITY;
}

bool satisfies_tag(const ComplexMatrix& a, LieTag tag, double tol) { return tag_violation(a, tag) <= tol; }

ComplexMatrix pauli(int a) {
  switch (a) {
    case 1: return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0});
    case 2: return ComplexMatrix(2, {0.0, -I_UNIT, I_UNIT, 0.0});
    case 3: return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0});
    default: throw DimensionError("Pauli index must be 1, 2 or 3");
  }
}

ComplexMatrix so3_generator(int a) {
  if (a < 1 || a > 3) throw DimensionError("so(3) generator index must be 1, 2 or 3");
  ComplexMatrix m(3, LieTag::so3);
  // (L_a)_{jk} = -eps_{ajk}
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      const int i = a - 1;
      int eps = 0;
      if (i != j && j != k && i != k) eps = ((j - i + 3) % 3 == 1) ? 1 : -1;
      m(j, k) = -static_cast<double>(eps);
    }
  return m;
}

}  // namespace sdyred
