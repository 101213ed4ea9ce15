#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sdyred/errors.hpp"
#include "sdyred/reduction.hpp"
#include "sdyred/so3_su2.hpp"

using namespace sdyred;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ComplexMatrix random_so3(Rng& rng) {
  std::normal_distribution<double> n;
  return n(rng) * so3_generator(1) + n(rng) * so3_generator(2) + n(rng) * so3_generator(3);
}

double field_linf(const MatrixField& m) { return lp_norms(m).linf; }

// Traveling wave of the Zakharov system along x + y; exact up to the sech tail
// at the periodic boundary, which is below 1e-16 for a L >= 75.
FieldMap zakharov_sech(const Grid& g, double a) {
  const double length = g.length(0), kappa = kTwoPi / length;
  auto wrap = [length](double s) { return s - length * std::floor(s / length + 0.5); };
  auto f = [&](double s) { return a / std::cosh(a * wrap(s - 0.5 * length)); };
  double m = 0.0;
  for (int i = 0; i < g.size(0); ++i) m += std::pow(f(g.coord(0, i)), 2);
  m /= g.size(0);
  const double omega = 2.0 * m - a * a;
  FieldMap out;
  out["phi"] = ScalarField::sample(g, [&](double x, double y, double) {
    return f(x + y) * std::exp(cplx(0.0, kappa * y));
  });
  out["v"] = ScalarField::sample(g, [&](double x, double y, double) { return 2.0 * (f(x + y) * f(x + y) - m); });
  // phi_t = (kappa f' + i omega f) e^{i kappa y}; f' from the spectral derivative of f along x.
  const ScalarField fx = derivative(ScalarField::sample(g, [&](double x, double y, double) { return f(x + y); }), 0);
  out["phi_t"] = ScalarField::sample(g, [&](double x, double y, double) {
    return cplx(0.0, omega) * f(x + y) * std::exp(cplx(0.0, kappa * y));
  });
  for (std::size_t p = 0; p < g.points(); ++p)
    out["phi_t"][p] += kappa * fx[p] * std::exp(cplx(0.0, kappa * g.coord(1, g.index_along(p, 1))));
  return out;
}

}  // namespace

TEST_CASE("so(3) to su(2) isomorphism") {
  CHECK(so3_to_su2(ComplexMatrix(3)).is_zero());
  CHECK(max_abs(so3_to_su2(so3_generator(3)) - cplx(0, -0.5) * pauli(3)) < 1e-15);
  Rng rng(1);
  for (IsoFrame frame : {IsoFrame::standard, IsoFrame::adapted}) {
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix a = random_so3(rng), b = random_so3(rng);
      const ComplexMatrix lhs = commutator(so3_to_su2(a, frame), so3_to_su2(b, frame));
      CHECK(max_abs(lhs - so3_to_su2(commutator(a, b), frame)) < 1e-12);
      CHECK(satisfies_tag(so3_to_su2(a, frame), LieTag::su2));
      CHECK(max_abs(su2_to_so3(so3_to_su2(a, frame), frame) - a) < 1e-14);
    }
  }
  CHECK_THROWS_AS(so3_to_su2(ComplexMatrix::identity(3)), PreconditionError);
}

TEST_CASE("Zakharov connection") {
  const Grid g = Grid::plane(16, 16, kTwoPi, kTwoPi);
  SUBCASE("zero fields") {
    const ConnectionSet c = build_zakharov_connection(ScalarField(g), ScalarField(g), 1.0);
    CHECK(c.a[0].is_zero());
    CHECK(c.a[1].is_zero());
    CHECK(c.a[3].is_zero());
    const ComplexMatrix a3 = c.a[2].at(0);
    CHECK(!a3.is_zero());
    for (std::size_t p = 0; p < g.points(); ++p) CHECK(max_abs(c.a[2].at(p) - a3) == 0.0);
    CHECK((c.gauge_tags & gauge_a4_zero) != 0);
    CHECK((c.gauge_tags & gauge_a3_const) != 0);
  }
  SUBCASE("constant phi fills row and column 1 only") {
    const cplx phi(0.3, 0.4);
    const ConnectionSet c = build_zakharov_connection(ScalarField(g, phi), ScalarField(g), 1.0);
    const ComplexMatrix a1 = c.a[0].at(5);
    const cplx minus = I_UNIT * (phi - std::conj(phi)), plus = phi + std::conj(phi);
    CHECK(std::abs(a1(0, 1) - minus) < 1e-15);
    CHECK(std::abs(a1(1, 0) + minus) < 1e-15);
    CHECK(std::abs(a1(0, 2) - plus) < 1e-15);
    CHECK(std::abs(a1(2, 0) + plus) < 1e-15);
    CHECK(std::abs(a1(1, 2)) == 0.0);
    CHECK(std::abs(a1(2, 1)) == 0.0);
  }
  SUBCASE("random fields give tagged antisymmetric matrices") {
    Rng rng(2);
    const ScalarField phi = random_smooth_field(g, rng), v = random_smooth_field(g, rng, 1.0, true);
    const ConnectionSet c = build_zakharov_connection(phi, v, 1.0);
    for (int i = 0; i < 3; ++i) CHECK(c.a[static_cast<size_t>(i)].tag_violation(LieTag::so3) <= 1e-12);
    const ConnectionSet c21 = build_zakharov_connection(phi, v, -1.0);
    for (int i = 0; i < 3; ++i) CHECK(c21.a[static_cast<size_t>(i)].tag_violation(LieTag::so3c) <= 1e-12);
  }
  SUBCASE("non-real v is rejected") {
    CHECK_THROWS_AS(build_zakharov_connection(ScalarField(g), ScalarField(g, cplx(0, 1)), 1.0), PreconditionError);
  }
}

TEST_CASE("spin connection") {
  const Grid g = Grid::plane(16, 16, kTwoPi, kTwoPi);
  SUBCASE("constant spin along s3") {
    const ConnectionSet c = build_spin_connection(SpinField::constant(g, 0, 0, 1), ScalarField(g), 1.0);
    const ComplexMatrix a3 = c.a[2].at(0);
    CHECK(a3(1, 2) == cplx(1.0));
    CHECK(a3(2, 1) == cplx(-1.0));
    CHECK(max_abs(a3 - ComplexMatrix(3, {0, 0, 0, 0, 0, 1, 0, -1, 0})) == 0.0);
    CHECK(field_linf(c.a[3]) == 0.0);
    CHECK(c.a[0].is_zero());
    CHECK(c.a[1].is_zero());
  }
  SUBCASE("constant spin along s1") {
    for (double r : {1.0, -1.0}) {
      const ConnectionSet c = build_spin_connection(SpinField::constant(g, 1, 0, 0), ScalarField(g), r);
      const ComplexMatrix a3 = c.a[2].at(3);
      CHECK(std::abs(a3(0, 1) - r) < 1e-15);
      CHECK(std::abs(a3(1, 0) + r) < 1e-15);
    }
  }
  SUBCASE("A4 matches the closed form through S+ and S-") {
    Rng rng(3);
    const SpinField s = SpinField::from_angles(random_smooth_field(g, rng, 1.0, true) + cplx(0.8),
                                               random_smooth_field(g, rng, 2.0, true));
    const ScalarField u = random_smooth_field(g, rng, 1.0, true);
    for (double r : {1.0, -1.0}) {
      const ConnectionSet c = build_spin_connection(s, u, r);
      const MatrixField closed = spin_a4_closed_form(s, u, r);
      for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}})
        CHECK(lp_norms(c.a[3].entry(i, j) - closed.entry(i, j)).linf <= 1e-12);
    }
  }
  SUBCASE("unit norm is enforced") {
    CHECK_THROWS_AS(build_spin_connection(SpinField::constant(g, 1, 1, 0), ScalarField(g), 1.0), PreconditionError);
  }
}

TEST_CASE("gauge tags are enforced") {
  const Grid g = Grid::plane(8, 8, 1.0, 1.0);
  ConnectionSet c = build_zakharov_connection(ScalarField(g), ScalarField(g), 1.0);
  CHECK_NOTHROW(c.validate());
  c.a[3].entry(0, 1)[0] = 1e-300;
  CHECK_THROWS_AS(c.validate(), PreconditionError);
}

TEST_CASE("pure gauge connections") {
  const Grid g = Grid::plane(128, 128, kTwoPi, kTwoPi);
  const CoordinateRoles roles{CoordinateRole::on_axis(0, "x"), CoordinateRole::on_axis(1, "y"),
                              CoordinateRole::absent(), CoordinateRole::absent()};
  SUBCASE("identity") {
    const ConnectionSet c = pure_gauge_connection(MatrixField::identity(g, 2), roles);
    for (const auto& a : c.a) CHECK(a.is_zero());
  }
  SUBCASE("abelian path") {
    const ComplexMatrix k(2, {0.2, 0.5, -0.5, 0.1});
    MatrixField gauge(g, 2);
    for (std::size_t p = 0; p < g.points(); ++p) {
      // exp(sin x K) keeps periodicity; A_x = cos x K.
      gauge.set(p, matrix_exp(std::sin(g.coord(0, g.index_along(p, 0))) * k));
    }
    const ConnectionSet c = pure_gauge_connection(gauge, roles);
    double err = 0.0;
    for (std::size_t p = 0; p < g.points(); ++p)
      err = std::max(err, max_abs(c.a[0].at(p) - std::cos(g.coord(0, g.index_along(p, 0))) * k));
    CHECK(err <= 1e-12);
    CHECK(c.a[1].is_zero());
  }
  SUBCASE("product of two exponentials is flat") {
    const ComplexMatrix k1 = so3_to_su2(so3_generator(1)), k2 = so3_to_su2(so3_generator(2));
    MatrixField gauge(g, 2);
    for (std::size_t p = 0; p < g.points(); ++p) {
      const double x = g.coord(0, g.index_along(p, 0)), y = g.coord(1, g.index_along(p, 1));
      gauge.set(p, matrix_exp(std::sin(x) * k1) * matrix_exp(std::cos(y) * k2));
    }
    const ConnectionSet c = pure_gauge_connection(gauge, roles);
    CHECK(field_linf(curvature(c, 1, 2)) <= 1e-9);
    CHECK(sdym_residual(c).passed);
  }
  SUBCASE("singular gauge is rejected") {
    CHECK_THROWS_AS(pure_gauge_connection(MatrixField(g, 2), roles), NumericalError);
  }
}

TEST_CASE("reduction ledger") {
  const auto entries = ledger_entries();
  REQUIRE(entries.size() >= 2);
  CHECK(entries[0].name == "zakharov");
  CHECK(entries[1].name == "m1-spin");
  for (const auto& e : entries) {
    CAPTURE(e.name);
    CHECK(e.map_rank() == static_cast<int>(e.scalar_terms.size()));
  }
}

TEST_CASE("off-shell reduction identities") {
  const Grid g = Grid::plane(64, 64, kTwoPi, kTwoPi);
  for (double sign : {1.0, -1.0}) {
    for (const char* name : {"zakharov", "m1-spin"}) {
      const ReductionLedgerEntry e = ledger_entry(name, sign);
      for (int seed = 1; seed <= 3; ++seed) {
        Rng rng(static_cast<std::uint64_t>(seed));
        const ResidualReport r = reduction_equivalence(e, random_ledger_fields(e, g, rng));
        CAPTURE(name);
        CAPTURE(sign);
        CHECK(r.passed);
        CHECK(r.worst() <= 1e-10);
      }
    }
  }
}

TEST_CASE("reduction identities on trivial data") {
  const Grid g = Grid::plane(16, 16, kTwoPi, kTwoPi);
  SUBCASE("zero Zakharov fields") {
    const FieldMap f{{"phi", ScalarField(g)}, {"v", ScalarField(g)}, {"phi_t", ScalarField(g)}};
    const ResidualReport r = reduction_equivalence(ledger_entry("zakharov"), f);
    for (const auto& c : r.components) CHECK(c.linf == 0.0);
  }
  SUBCASE("constant spin") {
    const SpinField s = SpinField::constant(g, 0.6, 0.0, 0.8);
    const FieldMap f{{"s1", s.s1}, {"s2", s.s2}, {"s3", s.s3}, {"u", ScalarField(g)},
                     {"s1_t", ScalarField(g)}, {"s2_t", ScalarField(g)}, {"s3_t", ScalarField(g)}};
    const ReductionLedgerEntry e = ledger_entry("m1-spin");
    const ResidualReport scalar = pde_residual(e.equation_id(), f);
    for (const auto& c : scalar.components) CHECK(c.linf == 0.0);
    const ConnectionSet conn = e.build(f);
    const ResidualReport matrix = sdym3_residual(conn, e.matrix_variant);
    for (const auto& c : matrix.components) CHECK(c.linf <= 1e-15);
  }
}

TEST_CASE("Zakharov connection of an exact solution is self-dual") {
  const Grid g = Grid::plane(512, 512, 8.0 * std::numbers::pi, 8.0 * std::numbers::pi);
  const FieldMap f = zakharov_sech(g, 3.0);
  const ReductionLedgerEntry e = ledger_entry("zakharov");
  const ResidualReport scalar = pde_residual(e.equation_id(), f);
  CHECK(scalar.worst() <= 1e-10);
  const ResidualReport matrix = sdym3_residual(e.build(f), e.matrix_variant);
  CHECK(matrix.worst() <= 1e-8);
}
