#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sdyred/curvature.hpp"
#include "sdyred/errors.hpp"
#include "sdyred/gauge_link.hpp"
#include "sdyred/kp_operator.hpp"
#include "sdyred/lax.hpp"
#include "sdyred/nonisospectral.hpp"

using namespace sdyred;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double linf(const MatrixField& m) { return lp_norms(m).linf; }
double linf(const ScalarField& f) { return lp_norms(f).linf; }

bool constant_equals(const MatrixField& f, const ComplexMatrix& m, double tol) {
  for (std::size_t p = 0; p < f.grid().points(); ++p)
    if (max_abs(f.at(p) - m) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("Lax pair builders on trivial data") {
  const Grid g = Grid::plane(8, 8, kTwoPi, kTwoPi);
  const ScalarField zero(g);
  const cplx i = I_UNIT;

  SUBCASE("ze with phi = v = 0") {
    const LaxPair p = build_ze_lax(zero, zero, 1.0, zero);
    REQUIRE(p.u_poly.degree() == 1);
    CHECK(p.u_poly.coeff(0).is_zero());
    CHECK(constant_equals(p.u_poly.coeff(1), (0.5 * i) * pauli(3), 0.0));
    for (const auto& c : p.v_poly.coeffs()) CHECK(c.is_zero());
    CHECK(p.y_coeff == ScalarPoly{0.0, 1.0});
    // Only rounding from differentiating the constant sigma_3 coefficient remains.
    const LambdaMatrixField z = zero_curvature(p);
    for (const auto& c : z.coeffs()) CHECK(linf(c) <= 1e-15);
    CHECK_THROWS_AS(build_ze_lax(zero, zero, 0.5), PreconditionError);
  }
  SUBCASE("mi with constant spin") {
    const LaxPair p = build_mi_lax(SpinField::constant(g, 0, 0, 1), zero, SpinRates{zero, zero, zero});
    CHECK(constant_equals(p.u_poly.coeff(1), (0.5 * i) * pauli(3), 0.0));
    CHECK(p.v_poly.coeff(1).is_zero());
    CHECK(zero_curvature_residual(p).worst() == 0.0);
    CHECK_THROWS_AS(build_mi_lax(SpinField::constant(g, 0, 0, 2), zero), PreconditionError);
  }
  SUBCASE("m22q with q = p = 0") {
    const LaxPair p = build_m22q_lax(zero, zero, zero, zero, zero, zero);
    REQUIRE(p.u_poly.degree() == 2);
    CHECK(p.u_poly.coeff(0).is_zero());
    CHECK(p.u_poly.coeff(1).is_zero());
    CHECK(constant_equals(p.u_poly.coeff(2), (-i) * pauli(3), 0.0));
    CHECK(zero_curvature_residual(p).worst() == 0.0);
  }
  SUBCASE("missing time derivative") {
    const LaxPair p = build_ze_lax(zero, zero, 1.0);
    CHECK_THROWS_AS(zero_curvature(p), PreconditionError);
  }
}

TEST_CASE("uniform Zakharov state is on shell for its Lax pair") {
  const Grid g = Grid::plane(16, 16, kTwoPi, kTwoPi);
  const double omega = 0.6;
  const ScalarField phi(g, cplx(0.5, -0.2));
  const LaxPair p = build_ze_lax(phi, ScalarField(g, omega), 1.0, cplx(0.0, -omega) * phi);
  const ResidualReport r = zero_curvature_residual(p, 1e-13);
  CHECK(r.passed);
  // Off shell by a frequency error the residual is of order one.
  const LaxPair off = build_ze_lax(phi, ScalarField(g, omega), 1.0, cplx(0.0, -2.0 * omega) * phi);
  CHECK(zero_curvature_residual(off).worst() > 0.1);
}

TEST_CASE("lambda grading of every Lax case") {
  const Grid g = Grid::plane(64, 64, kTwoPi, kTwoPi);
  for (const auto& lc : lax_cases()) {
    CAPTURE(lc.name);
    Rng rng(100);
    const FieldMap first = lc.random_fields(g, rng), second = lc.random_fields(g, rng);
    const ResidualReport r = lax_grading_check(lc, first);
    CHECK(r.passed);
    CHECK(r.worst() <= 1e-9);
    const auto e1 = extract_grading(lc, first), e2 = extract_grading(lc, second);
    CHECK(grading_distance(e1, e2) <= 1e-9);
    CHECK(grading_distance(e1, lc.declared) <= 1e-9);
    // A perturbed declaration is detected.
    auto wrong = lc.declared;
    wrong.front().coeffs.front() += 0.25;
    CHECK(grading_distance(wrong, lc.declared) == doctest::Approx(0.25));
  }
  CHECK_THROWS_AS(lax_case("kdv"), PreconditionError);
}

TEST_CASE("Strachan pair is the d = 0 restriction") {
  const Grid g = Grid::plane(16, 16, kTwoPi, kTwoPi);
  Rng rng(5);
  auto field = [&] { return random_smooth_field(g, rng); };
  const ScalarField q = field(), p = field(), v = field(), qt = field(), pt = field();
  for (double c : {0.7, -1.3}) {
    CHECK(identical(build_m3q_lax(q, p, v, c, 0.0, qt, pt), build_strachan_lax(q, p, v, c, qt, pt)));
    CHECK_FALSE(identical(build_m3q_lax(q, p, v, c, 0.2, qt, pt), build_strachan_lax(q, p, v, c, qt, pt)));
  }
}

TEST_CASE("gauge covariance of zero curvature") {
  const Grid g = Grid::plane(64, 64, kTwoPi, kTwoPi);
  Rng rng(6);
  const LaxCase lc = lax_case("ze");
  const FieldMap f = lc.random_fields(g, rng);
  const LaxPair pair = lc.build(f);
  const ScalarField chi = random_smooth_field(g, rng, 0.3, false, 2),
                    chi_t = random_smooth_field(g, rng, 0.3, false, 2);
  const ComplexMatrix k = pauli(3);
  const LaxPair moved = gauge_transform_pair(pair, chi, chi_t, k);
  const LambdaMatrixField z = zero_curvature(pair), z2 = zero_curvature(moved);
  const MatrixField kf = MatrixField::constant(g, k);
  const MatrixField h = pointwise_exp(chi * kf), h_inv = pointwise_exp((-chi) * kf);
  REQUIRE(z2.degree() >= z.degree());
  for (int j = 0; j <= z.degree(); ++j) {
    const MatrixField want = h * z.coeff(j) * h_inv;
    CHECK(linf(z2.coeff(j) - want) <= 1e-10 * (1.0 + linf(want)));
  }
  for (int j = z.degree() + 1; j <= z2.degree(); ++j) CHECK(linf(z2.coeff(j)) <= 1e-10);
}

TEST_CASE("differential operator algebra") {
  const Grid g = Grid::plane(32, 32, kTwoPi, kTwoPi);
  Rng rng(7);
  const ScalarField f = random_smooth_field(g, rng), h = random_smooth_field(g, rng);
  const DiffOp d = DiffOp::dx_power(g, 1), mf = DiffOp::multiplication(f);
  // d o f applied to h is (f h)_x.
  const ScalarField lhs = compose(d, mf).apply(h), rhs = derivative(f * h, 0);
  CHECK(linf(lhs - rhs) <= 1e-11 * linf(rhs));
  // [d, f] = f_x.
  const DiffOp c = commutator(d, mf);
  CHECK(c.order() <= 1);
  CHECK(linf(c.coeff(0) - derivative(f, 0)) <= 1e-11 * linf(derivative(f, 0)));
  if (c.order() == 1) CHECK(linf(c.coeff(1)) <= 1e-12);
  // d^2 o d = d^3.
  const DiffOp d3 = compose(DiffOp::dx_power(g, 2), d);
  CHECK(linf(d3.apply(h) - derivative(h, 0, DiffMethod::spectral, 3)) <= 1e-10 * linf(derivative(h, 0, DiffMethod::spectral, 3)));
}

TEST_CASE("KP operator pair") {
  const Grid g = Grid::plane(48, 48, kTwoPi, kTwoPi);
  Rng rng(8);
  for (double alpha : {1.0, -0.7}) {
    const FieldMap f{{"k", random_smooth_field(g, rng, 1.0, true)},
                     {"m3", random_smooth_field(g, rng, 1.0, true)},
                     {"k_t", random_smooth_field(g, rng, 1.0, true)}};
    const ResidualReport r = kp_lax_check(f, alpha);
    CHECK(r.passed);
  }
  SUBCASE("zero fields commute") {
    const KpLaxPair p = build_kp_lax(ScalarField(g), ScalarField(g), 1.0, ScalarField(g));
    const DiffOp z = kp_zero_curvature(p);
    for (const auto& c : z.coeffs()) CHECK(linf(c) == 0.0);
  }
}

TEST_CASE("gauge link between the two nonlinear systems") {
  const Grid g = Grid::plane(64, 64, kTwoPi, kTwoPi);
  Rng rng(9);
  for (int draw = 0; draw < 3; ++draw) {
    const FieldMap f = random_gauge_fields(g, rng);
    const ResidualReport r = gauge_equivalence_check(f);
    CHECK(r.passed);
    CHECK(r.component("product").relative <= 1e-13);
  }

  SUBCASE("field transform preserves the product") {
    const FieldMap f = random_gauge_fields(g, rng);
    const GaugedFields t = gauge_transform_fields(f.at("q"), f.at("p"));
    const ScalarField pq = f.at("p") * f.at("q");
    CHECK(linf(t.q * t.p - pq) <= 1e-13 * linf(pq));
    CHECK(linf(derivative(t.theta, 0) - pq) <= 1e-10 * linf(pq));
  }

  SUBCASE("gauge factor is diagonal, unitary and unimodular") {
    const ScalarField q = random_smooth_field(g, rng);
    const MatrixField h = gauge_factor(q, MeanPolicy::subtract);
    CHECK(linf(h.entry(0, 1)) == 0.0);
    CHECK(linf(h.entry(1, 0)) == 0.0);
    CHECK(linf(h * adjoint(h) - MatrixField::identity(g, 2)) <= 1e-14);
    CHECK(linf(h.entry(0, 0) * h.entry(1, 1) - ScalarField(g, 1.0)) <= 1e-14);
    CHECK_THROWS_AS(gauge_factor(q), PreconditionError);
  }
}

TEST_CASE("nonisospectral spectral parameter") {
  SUBCASE("worked example") {
    LambdaParams p;
    p.n1 = 2.0;
    p.n3 = 1.0;
    p.n4 = 3.0;
    const std::vector<double> at = {0.0, 1.0, 1.0};
    CHECK(lambda_value(p, NonisoVariant::xyt, at) == doctest::Approx(3.0));
    const auto grad = lambda_gradient(p, NonisoVariant::xyt, at);
    REQUIRE(grad.size() == 3);
    CHECK(grad[0] == 0.0);
    CHECK(grad[1] == doctest::Approx(2.0));
    CHECK(grad[2] == doctest::Approx(6.0));
  }
  SUBCASE("n1 = 0 gives a constant") {
    LambdaParams p;
    p.n3 = 0.4;
    p.n4 = 2.0;
    const Window w({0, 0, 0}, {1, 1, 1}, {5, 5, 5});
    const LambdaField lf = lambda_field(p, w, NonisoVariant::xyt);
    for (const cplx v : lf.values) CHECK(v == cplx(0.2));
    CHECK(nonisospectral_residual(lf).worst() == 0.0);
  }
  SUBCASE("a pole inside the window is rejected") {
    LambdaParams p;
    p.n1 = 2.0;
    p.n4 = 1.0;  // D = 1 - 2t vanishes at t = 1/2
    CHECK_THROWS_AS(lambda_field(p, Window({0, 0, 0}, {1, 1, 1}, {5, 5, 5}), NonisoVariant::xyt),
                    PreconditionError);
  }
  SUBCASE("analytic and finite-difference checks") {
    LambdaParams p;
    p.n1 = 0.3;
    p.n3 = -0.2;
    p.n4 = 1.5;
    p.m1 = 0.25;
    p.m3c = 0.1;
    p.m4 = 0.4;
    for (NonisoVariant v : {NonisoVariant::xyt, NonisoVariant::four_coordinate}) {
      const int dims = v == NonisoVariant::xyt ? 3 : 4;
      const Window coarse(std::vector<double>(dims, 0.0), std::vector<double>(dims, 1.0), std::vector<int>(dims, 7));
      const LambdaField lf = lambda_field(p, coarse, v);
      CHECK(nonisospectral_residual(lf, NonisoDerivative::analytic, 1e-12).passed);
      const Window fine(std::vector<double>(dims, 0.0), std::vector<double>(dims, 1.0),
                        std::vector<int>(dims, dims == 3 ? 41 : 21));
      CHECK(nonisospectral_residual(lambda_field(p, fine, v), NonisoDerivative::finite_difference, 1e-6).passed);
      // Gradient against a centred difference of the value.
      std::vector<double> at(static_cast<size_t>(dims), 0.37);
      const auto grad = lambda_gradient(p, v, at);
      for (int a = 0; a < dims; ++a) {
        auto lo = at, hi = at;
        lo[static_cast<size_t>(a)] -= 1e-5;
        hi[static_cast<size_t>(a)] += 1e-5;
        const double fd = (lambda_value(p, v, hi) - lambda_value(p, v, lo)) / 2e-5;
        CHECK(std::abs(grad[static_cast<size_t>(a)] - fd) <= 1e-8);
      }
    }
  }
  CHECK(parse_noniso_variant(to_string(NonisoVariant::four_coordinate)) == NonisoVariant::four_coordinate);
  CHECK_THROWS_AS(parse_noniso_variant("xy"), PreconditionError);
}

TEST_CASE("self-dual linear problem") {
  const Grid g = Grid::box(12, 12, 12, kTwoPi, kTwoPi, kTwoPi);
  Rng rng(10);
  ConnectionSet c;
  c.roles = {CoordinateRole::on_axis(0, "x1"), CoordinateRole::on_axis(1, "x2"), CoordinateRole::on_axis(2, "x3"),
             CoordinateRole::supplied("x4")};
  for (std::size_t i = 0; i < 4; ++i) {
    c.a[i] = MatrixField(g, 2);
    c.d_supplied[i] = MatrixField(g, 2);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        c.a[i].entry(a, b) = random_smooth_field(g, rng);
        c.d_supplied[i]->entry(a, b) = random_smooth_field(g, rng);
      }
  }
  const LambdaMatrixField comm = sdym_lax_commutator(build_sdym_lax(c));
  const auto sd = sdym_components(c);
  const std::vector<MatrixField> want = {-sd[0].residual(), -sd[2].residual(), -sd[1].residual()};
  REQUIRE(comm.degree() >= 2);
  for (int k = 0; k < 3; ++k)
    CHECK(linf(comm.coeff(k) - want[static_cast<size_t>(k)]) <= 1e-12 * linf(want[static_cast<size_t>(k)]));
  for (int k = 3; k <= comm.degree(); ++k) CHECK(linf(comm.coeff(k)) <= 1e-12);
}
