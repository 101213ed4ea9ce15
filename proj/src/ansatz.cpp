#include "sdyred/ansatz.hpp"

#include <algorithm>
#include <cmath>

#include "sdyred/errors.hpp"
#include "sdyred/so3_su2.hpp"

namespace sdyred {

double SpinField::norm_violation() const {
  double v = 0.0;
  for (std::size_t p = 0; p < s1.size(); ++p) {
    const double n2 = std::norm(s1[p]) + std::norm(s2[p]) + std::norm(s3[p]);
    v = std::max(v, std::abs(n2 - 1.0));
  }
  return v;
}

void SpinField::require_unit(double tol) const {
  require_same_grid(s1.grid(), s2.grid(), "spin field");
  require_same_grid(s1.grid(), s3.grid(), "spin field");
  if (norm_violation() > tol) throw PreconditionError("spin field is not unit-norm");
}

MatrixField SpinField::matrix() const {
  MatrixField m(grid(), 2);
  m.entry(0, 0) = s3;
  m.entry(1, 1) = -s3;
  m.entry(0, 1) = s1 - I_UNIT * s2;
  m.entry(1, 0) = s1 + I_UNIT * s2;
  return m;
}

SpinField SpinField::from_angles(const ScalarField& theta, const ScalarField& psi) {
  SpinField s{ScalarField(theta.grid()), ScalarField(theta.grid()), ScalarField(theta.grid())};
  for (std::size_t p = 0; p < theta.size(); ++p) {
    const double th = theta[p].real(), ps = psi[p].real();
    s.s1[p] = std::sin(th) * std::cos(ps);
    s.s2[p] = std::sin(th) * std::sin(ps);
    s.s3[p] = std::cos(th);
  }
  return s;
}

SpinField SpinField::constant(const Grid& grid, double s1, double s2, double s3) {
  return {ScalarField(grid, s1), ScalarField(grid, s2), ScalarField(grid, s3)};
}

namespace {

MatrixField off_diagonal(const ScalarField& upper, const ScalarField& lower) {
  MatrixField g(upper.grid(), 2);
  g.entry(0, 1) = upper;
  g.entry(1, 0) = lower;
  return g;
}

MatrixField sigma3_right(const MatrixField& m) {
  return m * pauli(3);
}

// S_r = s3 sigma_3 + r (s1 sigma_1 + s2 sigma_2) built from component fields.
MatrixField spin_matrix(const ScalarField& s1, const ScalarField& s2, const ScalarField& s3, double r) {
  MatrixField m(s1.grid(), 2);
  m.entry(0, 0) = s3;
  m.entry(1, 1) = -s3;
  m.entry(0, 1) = r * (s1 - I_UNIT * s2);
  m.entry(1, 0) = r * (s1 + I_UNIT * s2);
  return m;
}

void require_real(const ScalarField& f, const char* what) {
  if (f.max_imag() > 1e-12) throw PreconditionError(std::string(what) + " must be real-valued");
}

}  // namespace

ConnectionSet build_zakharov_connection(const ScalarField& phi, const ScalarField& v, double r2,
                                        const std::optional<ScalarField>& phi_t,
                                        const std::optional<ScalarField>& v_t) {
  require_same_grid(phi.grid(), v.grid(), "zakharov ansatz");
  require_real(v, "v");
  if (r2 != 1.0 && r2 != -1.0) throw PreconditionError("r2 must be +1 or -1");
  const Grid& grid = phi.grid();
  const LieTag tag = r2 > 0 ? LieTag::su2 : LieTag::sl2;

  auto g_of = [&](const ScalarField& f) { return off_diagonal(f, (-r2) * conj(f)); };
  auto v_of = [&](const ScalarField& vv, const ScalarField& f) {
    // V = -(i/2) v sigma_3 + i G_y sigma_3
    MatrixField gy = derivative(g_of(f), 1);
    return (-0.5 * I_UNIT) * (vv * MatrixField::constant(grid, pauli(3))) + I_UNIT * sigma3_right(gy);
  };

  ConnectionSet c;
  c.roles = xyt_roles();
  c.gauge_tags = gauge_a4_zero | gauge_a3_const;
  c.a[0] = su2_to_so3(g_of(phi).set_tag(tag), IsoFrame::adapted);
  c.a[1] = su2_to_so3(v_of(v, phi).set_tag(tag), IsoFrame::adapted);
  c.a[2] = su2_to_so3(MatrixField::constant(grid, (-0.5 * I_UNIT) * pauli(3)).set_tag(tag), IsoFrame::adapted);
  c.a[3] = MatrixField(grid, 3, c.a[0].tag());

  if (phi_t) {
    c.d_supplied[0] = su2_to_so3(g_of(*phi_t).set_tag(tag), IsoFrame::adapted);
    if (v_t) c.d_supplied[1] = su2_to_so3(v_of(*v_t, *phi_t).set_tag(tag), IsoFrame::adapted);
    c.d_supplied[2] = MatrixField(grid, 3);
    c.d_supplied[3] = MatrixField(grid, 3);
  }
  c.validate();
  return c;
}

ConnectionSet build_spin_connection(const SpinField& s, const ScalarField& u, double r,
                                    const std::optional<SpinRates>& s_t) {
  s.require_unit();
  require_real(u, "u");
  require_same_grid(s.grid(), u.grid(), "spin ansatz");
  if (r != 1.0 && r != -1.0) throw PreconditionError("r must be +1 or -1");
  const Grid& grid = s.grid();

  const MatrixField sr = spin_matrix(s.s1, s.s2, s.s3, r);
  const MatrixField w = commutator(sr, derivative(sr, 1)) + (2.0 * I_UNIT) * (u * sr);

  ConnectionSet c;
  c.roles = xyt_roles();
  c.gauge_tags = gauge_a1a2_zero;
  c.a[0] = MatrixField(grid, 3, LieTag::so3);
  c.a[1] = MatrixField(grid, 3, LieTag::so3);
  c.a[2] = su2_to_so3(((-0.5 * I_UNIT) * sr).set_tag(LieTag::su2), IsoFrame::adapted);
  c.a[3] = su2_to_so3((-0.25 * w).set_tag(LieTag::su2), IsoFrame::adapted);
  if (s_t) {
    const MatrixField sr_t = spin_matrix(s_t->s1, s_t->s2, s_t->s3, r);
    c.d_supplied[0] = MatrixField(grid, 3);
    c.d_supplied[1] = MatrixField(grid, 3);
    c.d_supplied[2] = su2_to_so3(((-0.5 * I_UNIT) * sr_t).set_tag(LieTag::su2), IsoFrame::adapted);
  }
  c.validate();
  return c;
}

MatrixField spin_a4_closed_form(const SpinField& s, const ScalarField& u, double r) {
  const ScalarField s1y = derivative(s.s1, 1), s2y = derivative(s.s2, 1), s3y = derivative(s.s3, 1);
  const ScalarField sp = s.s1 + I_UNIT * s.s2, sm = s.s1 - I_UNIT * s.s2;
  const ScalarField spy = s1y + I_UNIT * s2y, smy = s1y - I_UNIT * s2y;
  MatrixField a(s.grid(), 3, LieTag::so3);
  a.entry(0, 1) = r * (s.s1 * u + s.s2 * s3y - s.s3 * s2y);
  a.entry(0, 2) = r * (s.s1 * s3y - s.s2 * u - s.s3 * s1y);
  a.entry(1, 2) = (r * r * 0.5 * I_UNIT) * (sp * smy - sm * spy) + s.s3 * u;
  a.entry(1, 0) = -a.entry(0, 1);
  a.entry(2, 0) = -a.entry(0, 2);
  a.entry(2, 1) = -a.entry(1, 2);
  return a;
}

}  // namespace sdyred
