#include "sdyred/so3_su2.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "sdyred/errors.hpp"

namespace sdyred {

namespace {

template <class T>
using Triple = std::array<T, 3>;

// Coefficients in M = sum_a c_a L_a.
template <class T>
Triple<T> so3_coeffs(const T& m12, const T& m13, const T& m23) {
  return {-m23, m13, -m12};
}

template <class T>
Triple<T> frame_permute(const Triple<T>& c) {
  // R c with R = [[0,0,-1],[0,-1,0],[-1,0,0]]; R is an involution.
  return {-1.0 * c[2], -1.0 * c[1], -1.0 * c[0]};
}

void check_tag(const ComplexMatrix& m, LieTag expect_real, LieTag expect_complex, const char* what) {
  LieTag tag = m.tag();
  if (tag == LieTag::none) tag = expect_complex;
  if (tag != expect_real && tag != expect_complex)
    throw PreconditionError(std::string(what) + ": input tagged " + to_string(m.tag()));
  const double scale = std::max(1.0, max_abs(m));
  if (tag_violation(m, tag) > 1e-12 * scale)
    throw PreconditionError(std::string(what) + ": input violates its Lie-algebra tag " + to_string(tag));
}

}  // namespace

ComplexMatrix so3_to_su2(const ComplexMatrix& m, IsoFrame frame) {
  if (m.dim() != 3) throw DimensionError("so3_to_su2 expects a 3x3 matrix");
  check_tag(m, LieTag::so3, LieTag::so3c, "so3_to_su2");
  Triple<cplx> c = so3_coeffs(m(0, 1), m(0, 2), m(1, 2));
  if (frame == IsoFrame::adapted) c = frame_permute(c);
  // X = -(i/2) sum_b c_b sigma_b
  const cplx h = -0.5 * I_UNIT;
  ComplexMatrix x(2, {h * c[2], h * (c[0] - I_UNIT * c[1]), h * (c[0] + I_UNIT * c[1]), -h * c[2]});
  x.set_tag(m.tag() == LieTag::so3 ? LieTag::su2 : LieTag::sl2);
  return x;
}

ComplexMatrix su2_to_so3(const ComplexMatrix& x, IsoFrame frame) {
  if (x.dim() != 2) throw DimensionError("su2_to_so3 expects a 2x2 matrix");
  check_tag(x, LieTag::su2, LieTag::sl2, "su2_to_so3");
  // Pauli coefficients, then c = 2i * coefficients.
  const cplx x1 = 0.5 * (x(0, 1) + x(1, 0));
  const cplx x2 = (x(1, 0) - x(0, 1)) / (2.0 * I_UNIT);
  const cplx x3 = 0.5 * (x(0, 0) - x(1, 1));
  Triple<cplx> c = {2.0 * I_UNIT * x1, 2.0 * I_UNIT * x2, 2.0 * I_UNIT * x3};
  if (frame == IsoFrame::adapted) c = frame_permute(c);
  ComplexMatrix m(3, {0.0, -c[2], c[1], c[2], 0.0, -c[0], -c[1], c[0], 0.0});
  m.set_tag(x.tag() == LieTag::su2 ? LieTag::so3 : LieTag::so3c);
  return m;
}

MatrixField so3_to_su2(const MatrixField& m, IsoFrame frame) {
  if (m.dim() != 3) throw DimensionError("so3_to_su2 expects a 3x3 matrix field");
  Triple<ScalarField> c = so3_coeffs(m.entry(0, 1), m.entry(0, 2), m.entry(1, 2));
  if (frame == IsoFrame::adapted) c = frame_permute(c);
  const cplx h = -0.5 * I_UNIT;
  MatrixField x(m.grid(), 2, m.tag() == LieTag::so3 ? LieTag::su2 : LieTag::sl2);
  x.entry(0, 0) = h * c[2];
  x.entry(1, 1) = -h * c[2];
  x.entry(0, 1) = h * (c[0] - I_UNIT * c[1]);
  x.entry(1, 0) = h * (c[0] + I_UNIT * c[1]);
  return x;
}

MatrixField su2_to_so3(const MatrixField& x, IsoFrame frame) {
  if (x.dim() != 2) throw DimensionError("su2_to_so3 expects a 2x2 matrix field");
  const ScalarField x1 = 0.5 * (x.entry(0, 1) + x.entry(1, 0));
  const ScalarField x2 = (-0.5 * I_UNIT) * (x.entry(1, 0) - x.entry(0, 1));
  const ScalarField x3 = 0.5 * (x.entry(0, 0) - x.entry(1, 1));
  Triple<ScalarField> c = {2.0 * I_UNIT * x1, 2.0 * I_UNIT * x2, 2.0 * I_UNIT * x3};
  if (frame == IsoFrame::adapted) c = frame_permute(c);
  MatrixField m(x.grid(), 3, x.tag() == LieTag::su2 ? LieTag::so3 : LieTag::so3c);
  m.entry(0, 1) = -c[2];
  m.entry(1, 0) = c[2];
  m.entry(0, 2) = c[1];
  m.entry(2, 0) = -c[1];
  m.entry(1, 2) = -c[0];
  m.entry(2, 1) = c[0];
  return m;
}

}  // namespace sdyred
