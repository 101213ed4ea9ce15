#include "sdyred/field.hpp"

#include <algorithm>
#include <cmath>

#include "sdyred/errors.hpp"

namespace sdyred {

ScalarField::ScalarField(const Grid& grid, cplx value) : grid_(grid), v_(grid.points(), value) {}

ScalarField::ScalarField(const Grid& grid, std::vector<cplx> values) : grid_(grid), v_(std::move(values)) {
  if (v_.size() != grid_.points()) throw DimensionError("value count does not match grid");
}

ScalarField ScalarField::sample(const Grid& grid, const std::function<cplx(double, double, double)>& f) {
  ScalarField out(grid);
  for (std::size_t p = 0; p < grid.points(); ++p) {
    double c[3] = {0.0, 0.0, 0.0};
    for (int a = 0; a < grid.ndim(); ++a) c[a] = grid.coord(a, grid.index_along(p, a));
    out[p] = f(c[0], c[1], c[2]);
  }
  return out;
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  require_same_grid(grid_, o.grid_, "field addition");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  require_same_grid(grid_, o.grid_, "field subtraction");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

ScalarField& ScalarField::operator*=(const ScalarField& o) {
  require_same_grid(grid_, o.grid_, "field product");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] *= o.v_[i];
  return *this;
}

ScalarField& ScalarField::operator*=(cplx s) {
  for (auto& x : v_) x *= s;
  return *this;
}

bool ScalarField::all_finite() const {
  return std::all_of(v_.begin(), v_.end(), [](cplx x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

bool ScalarField::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](cplx x) { return x == cplx{}; });
}

double ScalarField::max_imag() const {
  double mi = 0.0, ma = 0.0;
  for (cplx x : v_) {
    mi = std::max(mi, std::abs(x.imag()));
    ma = std::max(ma, std::abs(x));
  }
  return ma > 0.0 ? mi / ma : 0.0;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator-(ScalarField a) { return a *= -1.0; }
ScalarField operator*(ScalarField a, const ScalarField& b) { return a *= b; }
ScalarField operator*(cplx s, ScalarField a) { return a *= s; }
ScalarField operator*(ScalarField a, cplx s) { return a *= s; }

ScalarField operator/(ScalarField a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "field division");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] /= b[i];
  return a;
}

ScalarField operator+(ScalarField a, cplx s) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s;
  return a;
}

ScalarField map(ScalarField a, const std::function<cplx(cplx)>& f) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f(a[i]);
  return a;
}

ScalarField conj(ScalarField a) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::conj(a[i]);
  return a;
}

ScalarField real_part(ScalarField a) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i].real();
  return a;
}

ScalarField abs2(const ScalarField& a) {
  ScalarField out(a.grid());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::norm(a[i]);
  return out;
}

ScalarField exp(ScalarField a) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::exp(a[i]);
  return a;
}

// ---------------------------------------------------------------------------

MatrixField::MatrixField(const Grid& grid, int dim, LieTag tag)
    : grid_(grid), dim_(dim), tag_(tag), e_(static_cast<size_t>(dim * dim), ScalarField(grid)) {
  if (dim < 2 || dim > ComplexMatrix::max_dim) throw DimensionError("matrix field dimension out of range");
}

MatrixField MatrixField::constant(const Grid& grid, const ComplexMatrix& m) {
  MatrixField f(grid, m.dim(), m.tag());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) f.entry(i, j) = ScalarField(grid, m(i, j));
  return f;
}

ComplexMatrix MatrixField::at(std::size_t point) const {
  ComplexMatrix m(dim_, tag_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = entry(i, j)[point];
  return m;
}

void MatrixField::set(std::size_t point, const ComplexMatrix& m) {
  if (m.dim() != dim_) throw DimensionError("matrix dimension does not match field");
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) entry(i, j)[point] = m(i, j);
}

static void require_compatible(const MatrixField& a, const MatrixField& b, const char* what) {
  require_same_grid(a.grid(), b.grid(), what);
  if (a.dim() != b.dim()) throw DimensionError(std::string(what) + ": matrix dimensions differ");
}

MatrixField& MatrixField::operator+=(const MatrixField& o) {
  require_compatible(*this, o, "matrix field addition");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  if (tag_ != o.tag_) tag_ = LieTag::none;
  return *this;
}

MatrixField& MatrixField::operator-=(const MatrixField& o) {
  require_compatible(*this, o, "matrix field subtraction");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  if (tag_ != o.tag_) tag_ = LieTag::none;
  return *this;
}

MatrixField& MatrixField::operator*=(cplx s) {
  for (auto& f : e_) f *= s;
  if (s.imag() != 0.0) {
    if (tag_ == LieTag::su2) tag_ = LieTag::sl2;
    if (tag_ == LieTag::so3) tag_ = LieTag::so3c;
  }
  return *this;
}

bool MatrixField::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const ScalarField& f) { return f.is_zero(); });
}

double MatrixField::tag_violation(LieTag tag) const {
  double v = 0.0;
  for (std::size_t p = 0; p < grid_.points(); ++p) v = std::max(v, sdyred::tag_violation(at(p), tag));
  return v;
}

MatrixField operator+(MatrixField a, const MatrixField& b) { return a += b; }
MatrixField operator-(MatrixField a, const MatrixField& b) { return a -= b; }
MatrixField operator-(MatrixField a) { return a *= -1.0; }
MatrixField operator*(cplx s, MatrixField a) { return a *= s; }

MatrixField operator*(const ScalarField& s, const MatrixField& a) {
  MatrixField out(a.grid(), a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out.entry(i, j) = s * a.entry(i, j);
  return out;
}

MatrixField operator*(const MatrixField& a, const MatrixField& b) {
  require_compatible(a, b, "matrix field product");
  const int n = a.dim();
  MatrixField out(a.grid(), n);
  const std::size_t np = a.grid().points();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx* c = out.entry(i, j).data();
      for (int k = 0; k < n; ++k) {
        const cplx* x = a.entry(i, k).data();
        const cplx* y = b.entry(k, j).data();
        for (std::size_t p = 0; p < np; ++p) c[p] += x[p] * y[p];
      }
    }
  return out;
}

MatrixField operator*(const ComplexMatrix& m, const MatrixField& a) {
  return MatrixField::constant(a.grid(), m) * a;
}

MatrixField operator*(const MatrixField& a, const ComplexMatrix& m) {
  return a * MatrixField::constant(a.grid(), m);
}

MatrixField commutator(const MatrixField& a, const MatrixField& b) {
  MatrixField c = a * b - b * a;
  c.set_tag(a.tag() == b.tag() ? a.tag() : LieTag::none);
  return c;
}

MatrixField adjoint(const MatrixField& a) {
  MatrixField out(a.grid(), a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out.entry(i, j) = conj(a.entry(j, i));
  return out;
}

ScalarField trace(const MatrixField& a) {
  ScalarField t(a.grid());
  for (int i = 0; i < a.dim(); ++i) t += a.entry(i, i);
  return t;
}

MatrixField pointwise_inverse(const MatrixField& a) {
  MatrixField out(a.grid(), a.dim());
  for (std::size_t p = 0; p < a.grid().points(); ++p) out.set(p, inverse(a.at(p)));
  return out;
}

MatrixField pointwise_exp(const MatrixField& a) {
  MatrixField out(a.grid(), a.dim());
  for (std::size_t p = 0; p < a.grid().points(); ++p) out.set(p, matrix_exp(a.at(p)));
  return out;
}

}  // namespace sdyred
