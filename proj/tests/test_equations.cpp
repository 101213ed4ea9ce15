#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "sdyred/equations.hpp"
#include "sdyred/errors.hpp"
#include "sdyred/random_fields.hpp"

using namespace sdyred;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Largest residual over all components relative to the largest term in the system,
// so entries whose sides vanish identically are not judged on rounding alone.
double worst_relative(const EquationId& eq, const FieldMap& f) {
  double res = 0.0, scale = 0.0;
  for (const auto& b : pde_components(eq, f)) {
    res = std::max(res, lp_norms(b.residual()).linf);
    scale = std::max({scale, lp_norms(b.lhs).linf, lp_norms(b.rhs).linf});
  }
  return res / std::max(scale, kRelativeFloor);
}

cplx cis(double a) { return std::polar(1.0, a); }

// Zero data for every required field of an equation on a grid of the right dimension.
FieldMap zero_fields(const EquationId& eq) {
  const Grid g = equation_info(eq.kind).spatial_dims == 1 ? Grid::line(32, kTwoPi)
                                                          : Grid::plane(16, 16, kTwoPi, kTwoPi);
  FieldMap f;
  for (const auto& name : required_fields(eq)) f[name] = ScalarField(g);
  return f;
}

// Precessing spin wave s = (sin th cos w, sin th sin w, cos th), w = k xi - omega t,
// sampled at t = 0 together with its time derivative.
FieldMap spin_wave(const Grid& g, double k, double theta, double omega,
                   const std::function<double(double, double)>& xi) {
  FieldMap f;
  auto at = [&](auto fn) { return ScalarField::sample(g, [&](double x, double y, double) { return fn(xi(x, y)); }); };
  const double st = std::sin(theta);
  f["s1"] = at([&](double s) { return cplx(st * std::cos(k * s)); });
  f["s2"] = at([&](double s) { return cplx(st * std::sin(k * s)); });
  f["s3"] = at([&](double) { return cplx(std::cos(theta)); });
  f["s1_t"] = at([&](double s) { return cplx(omega * st * std::sin(k * s)); });
  f["s2_t"] = at([&](double s) { return cplx(-omega * st * std::cos(k * s)); });
  f["s3_t"] = at([&](double) { return cplx(0.0); });
  return f;
}

double wrap(double s, double length) { return s - length * std::floor(s / length + 0.5); }

// Zakharov traveling wave along x + y (phase along y); v balances the zero-mean constraint.
FieldMap zakharov_sech(const Grid& g, double a) {
  const double length = g.length(0), kappa = kTwoPi / length;
  auto f = [&](double s) { return a / std::cosh(a * wrap(s - 0.5 * length, length)); };
  auto fp = [&](double s) {
    const double z = a * wrap(s - 0.5 * length, length);
    return -a * a * std::tanh(z) / std::cosh(z);
  };
  double m = 0.0;
  for (int i = 0; i < g.size(0); ++i) m += std::pow(f(g.coord(0, i)), 2);
  m /= g.size(0);
  const double omega = 2.0 * m - a * a;
  FieldMap out;
  out["phi"] = ScalarField::sample(g, [&](double x, double y, double) { return f(x + y) * cis(kappa * y); });
  out["v"] = ScalarField::sample(g, [&](double x, double y, double) { return 2.0 * (f(x + y) * f(x + y) - m); });
  out["phi_t"] = ScalarField::sample(g, [&](double x, double y, double) {
    return (kappa * fp(x + y) + cplx(0.0, omega) * f(x + y)) * cis(kappa * y);
  });
  return out;
}

}  // namespace

TEST_CASE("registry") {
  const auto names = equation_names();
  CHECK(names.size() == 18);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  for (const auto& n : names) CHECK(equation_info(n).name == n);
  CHECK_THROWS_AS(equation_info("kdv"), PreconditionError);

  const EquationId z = EquationId::make("zakharov");
  CHECK(z.param("r2") == 1.0);
  CHECK(required_fields(z) == std::vector<std::string>{"phi", "v", "phi_t"});
  const EquationId nz = EquationId::make("n_zakharov", {{"n", 3}});
  CHECK(required_fields(nz) ==
        std::vector<std::string>{"phi1", "phi2", "phi3", "v", "phi1_t", "phi2_t", "phi3_t"});

  CHECK_THROWS_AS(EquationId::make("nls", {{"alpha", 1.0}}), PreconditionError);
  CHECK_THROWS_AS(EquationId::make("nls", {{"r2", 2.0}}), PreconditionError);
  CHECK_THROWS_AS(EquationId::make("m1_spin", {{"r", 0.0}}), PreconditionError);
  CHECK_THROWS_AS(EquationId::make("n_zakharov", {{"n", 1.5}}), PreconditionError);
  CHECK_THROWS_AS(EquationId::make("n_zakharov", {{"n", 0}}), PreconditionError);
  CHECK_THROWS_AS(z.param("alpha"), PreconditionError);
}

TEST_CASE("zero data solves every equation exactly") {
  for (const auto& name : equation_names()) {
    CAPTURE(name);
    const EquationId eq = EquationId::make(name);
    const ResidualReport r = pde_residual(eq, zero_fields(eq));
    CHECK(r.passed);
    CHECK(!r.components.empty());
    for (const auto& c : r.components) CHECK(c.linf == 0.0);
  }
}

TEST_CASE("input validation") {
  const EquationId z = EquationId::make("zakharov");
  FieldMap f = zero_fields(z);
  SUBCASE("missing field") {
    f.erase("phi_t");
    CHECK_THROWS_AS(pde_residual(z, f), PreconditionError);
    CHECK_THROWS_AS(pde_residual(z, FieldMap{}), PreconditionError);
  }
  SUBCASE("grid mismatch") {
    f["v"] = ScalarField(Grid::plane(8, 8, kTwoPi, kTwoPi));
    CHECK_THROWS_AS(pde_residual(z, f), DimensionError);
  }
  SUBCASE("too few dimensions") {
    const Grid line = Grid::line(16, kTwoPi);
    FieldMap one{{"phi", ScalarField(line)}, {"v", ScalarField(line)}, {"phi_t", ScalarField(line)}};
    CHECK_THROWS_AS(pde_residual(z, one), DimensionError);
  }
  SUBCASE("reconstruction requests") {
    ResidualOptions opt;
    opt.reconstruct = {"u"};
    CHECK_THROWS_AS(pde_residual(z, f, opt), PreconditionError);
    const EquationId ds = EquationId::make("ds");
    opt.reconstruct = {"v"};
    CHECK_THROWS_AS(pde_residual(ds, zero_fields(ds), opt), PreconditionError);
    const EquationId ish = EquationId::make("ishimori");
    opt.reconstruct = {"u"};
    CHECK_THROWS_AS(pde_residual(ish, zero_fields(ish), opt), PreconditionError);
  }
}

TEST_CASE("NLS exact solutions") {
  const Grid g = Grid::line(512, 40.0);
  SUBCASE("plane waves, both signs") {
    for (double r2 : {1.0, -1.0}) {
      const Grid p = Grid::line(64, kTwoPi);
      const double k = 3.0, amp = 0.7, omega = -k * k + 2.0 * r2 * amp * amp;
      FieldMap f;
      f["phi"] = ScalarField::sample(p, [&](double x, double, double) { return amp * cis(k * x); });
      f["phi_t"] = cplx(0.0, -omega) * f["phi"];
      CHECK(worst_relative(EquationId::make("nls", {{"r2", r2}}), f) <= 1e-12);
      // The wrong sign of the nonlinearity is detected.
      CHECK(worst_relative(EquationId::make("nls", {{"r2", -r2}}), f) > 0.1);
    }
  }
  SUBCASE("bright soliton") {
    const double a = 2.0;
    FieldMap f;
    f["phi"] = ScalarField::sample(g, [&](double x, double, double) { return a / std::cosh(a * (x - 20.0)); });
    f["phi_t"] = cplx(0.0, -a * a) * f["phi"];
    CHECK(worst_relative(EquationId::make("nls"), f) <= 1e-10);
  }
  SUBCASE("nonlinear scaling") {
    Rng rng(3);
    FieldMap f{{"phi", random_smooth_field(g, rng)}, {"phi_t", random_smooth_field(g, rng)}};
    FieldMap twice{{"phi", 2.0 * f["phi"]}, {"phi_t", 2.0 * f["phi_t"]}};
    const EquationId eq = EquationId::make("nls");
    const ScalarField r1 = pde_components(eq, f)[0].residual();
    const ScalarField r2 = pde_components(eq, twice)[0].residual();
    // Only the cubic term fails to scale: R(2u) - 2R(u) = -12 |phi|^2 phi.
    const ScalarField want = -12.0 * (abs2(f["phi"]) * f["phi"]);
    CHECK(lp_norms(r2 - 2.0 * r1 - want).linf <= 1e-12 * lp_norms(want).linf);
  }
}

TEST_CASE("Zakharov system") {
  const EquationId eq = EquationId::make("zakharov");
  SUBCASE("uniform amplitude balanced by a constant potential") {
    const Grid g = Grid::plane(16, 16, kTwoPi, kTwoPi);
    const double omega = 0.8;
    FieldMap f{{"phi", ScalarField(g, cplx(0.3, 0.4))}, {"v", ScalarField(g, omega)}};
    f["phi_t"] = cplx(0.0, -omega) * f["phi"];
    CHECK(worst_relative(eq, f) <= 1e-14);
  }
  SUBCASE("sech traveling wave") {
    const Grid g = Grid::plane(512, 512, 8.0 * std::numbers::pi, 8.0 * std::numbers::pi);
    FieldMap f = zakharov_sech(g, 3.0);
    CHECK(worst_relative(eq, f) <= 1e-10);
    // Rebuilding v from phi reproduces the supplied potential.
    ResidualOptions opt;
    opt.reconstruct = {"v"};
    const FieldMap rebuilt = reconstruct_auxiliaries(eq, f, opt.reconstruct);
    CHECK(lp_norms(rebuilt.at("v") - f.at("v")).linf <= 1e-9);
    CHECK(pde_residual(eq, f, opt).worst() <= 1e-10);
  }
  SUBCASE("vector form with one empty component") {
    const Grid g = Grid::plane(512, 512, 8.0 * std::numbers::pi, 8.0 * std::numbers::pi);
    const FieldMap s = zakharov_sech(g, 3.0);
    FieldMap f{{"phi1", s.at("phi")}, {"phi1_t", s.at("phi_t")}, {"v", s.at("v")}};
    f["phi2"] = ScalarField(g);
    f["phi2_t"] = ScalarField(g);
    CHECK(worst_relative(EquationId::make("n_zakharov"), f) <= 1e-10);
  }
}

TEST_CASE("spin equations") {
  const double k = 3.0, theta = 0.7, omega = k * k * std::cos(theta);
  SUBCASE("Landau-Lifshitz spin wave") {
    const Grid g = Grid::line(64, kTwoPi);
    const FieldMap f = spin_wave(g, k, theta, omega, [](double x, double) { return x; });
    CHECK(worst_relative(EquationId::make("landau_lifshitz"), f) <= 1e-12);
    const FieldMap wrong = spin_wave(g, k, theta, -omega, [](double x, double) { return x; });
    CHECK(worst_relative(EquationId::make("landau_lifshitz"), wrong) > 0.1);
  }
  SUBCASE("M-I along the diagonal with vanishing u") {
    const Grid g = Grid::plane(32, 32, kTwoPi, kTwoPi);
    FieldMap f = spin_wave(g, k, theta, omega, [](double x, double y) { return x + y; });
    f["u"] = ScalarField(g);
    CHECK(worst_relative(EquationId::make("m1_spin"), f) <= 1e-12);
  }
  SUBCASE("Ishimori wave independent of y") {
    const Grid g = Grid::plane(32, 16, kTwoPi, kTwoPi);
    FieldMap f = spin_wave(g, k, theta, omega, [](double x, double) { return x; });
    f["u"] = ScalarField(g);
    CHECK(worst_relative(EquationId::make("ishimori", {{"alpha", 0.6}}), f) <= 1e-12);
  }
  SUBCASE("constant spin is static") {
    const Grid g = Grid::plane(16, 16, kTwoPi, kTwoPi);
    FieldMap f = spin_wave(g, 0.0, 0.4, 0.0, [](double x, double) { return x; });
    f["u"] = ScalarField(g);
    CHECK(pde_residual(EquationId::make("m1_spin", {{"r", -1.0}}), f).worst() == 0.0);
  }
  SUBCASE("reconstructed u is real") {
    const Grid g = Grid::plane(32, 32, kTwoPi, kTwoPi);
    Rng rng(8);
    ScalarField a = random_smooth_field(g, rng, 1.0, true), b = random_smooth_field(g, rng, 1.0, true),
                c = random_smooth_field(g, rng, 1.0, true) + cplx(2.0);
    const ScalarField n = map(abs2(a) + abs2(b) + abs2(c), [](cplx z) { return 1.0 / std::sqrt(z.real()); });
    FieldMap f{{"s1", a * n}, {"s2", b * n}, {"s3", c * n}};
    const FieldMap r = reconstruct_auxiliaries(EquationId::make("m1_spin"), f, {"u"});
    CHECK(lp_norms(r.at("u")).linf > 1e-6);
    CHECK(r.at("u").max_imag() <= 1e-12);
    CHECK(lp_norms(mean_x(r.at("u"))).linf <= 1e-13);
  }
}

TEST_CASE("KP line soliton") {
  const double L = 8.0 * std::numbers::pi, kappa = 1.5, l = 1.0;
  const Grid g = Grid::plane(256, 256, L, L);
  for (double alpha : {1.0, 0.5}) {
    CAPTURE(alpha);
    const double c = 4.0 * kappa * kappa + 3.0 * alpha * alpha * l * l;
    auto xi = [&](double x, double y) { return kappa * wrap(x + l * y - 0.5 * L, L); };
    FieldMap f;
    f["k"] = ScalarField::sample(g, [&](double x, double y, double) {
      return 2.0 * kappa * kappa / std::pow(std::cosh(xi(x, y)), 2);
    });
    f["m3"] = l * f["k"];
    f["k_t"] = ScalarField::sample(g, [&](double x, double y, double) {
      const double z = xi(x, y);
      return c * 4.0 * kappa * kappa * kappa * std::tanh(z) / std::pow(std::cosh(z), 2);
    });
    const EquationId eq = EquationId::make("kp", {{"alpha", alpha}});
    CHECK(worst_relative(eq, f) <= 1e-8);
    // Wrong speed fails.
    FieldMap slow = f;
    slow["k_t"] = 0.5 * f["k_t"];
    CHECK(worst_relative(eq, slow) > 0.1);
  }
}

TEST_CASE("auxiliary reconstruction satisfies its constraint") {
  const Grid g = Grid::plane(32, 32, kTwoPi, kTwoPi);
  Rng rng(9);
  const EquationId kp = EquationId::make("kp");
  FieldMap f{{"k", random_zero_mean_x_field(g, rng, 1.0, true)}};
  f["k_t"] = ScalarField(g);
  const FieldMap r = reconstruct_auxiliaries(kp, f, {"m3"});
  const auto parts = pde_components(kp, r);
  CHECK(measure(parts[1]).relative <= 1e-12);
  CHECK(lp_norms(mean_x(r.at("m3"))).linf <= 1e-13);
}

TEST_CASE("linear limits with plane waves") {
  const Grid g = Grid::plane(32, 32, kTwoPi, kTwoPi);
  const double kx = 2.0, ky = -3.0;
  const ScalarField wave = ScalarField::sample(g, [&](double x, double y, double) { return cis(kx * x + ky * y); });

  SUBCASE("Davey-Stewartson") {
    const double alpha = 0.8, omega = kx * kx + alpha * alpha * ky * ky;
    FieldMap f{{"q", wave}, {"p", ScalarField(g)}, {"v", ScalarField(g)}, {"p_t", ScalarField(g)}};
    f["q_t"] = cplx(0.0, -omega) * wave;
    CHECK(worst_relative(EquationId::make("ds", {{"alpha", alpha}}), f) <= 1e-13);
  }
  SUBCASE("general Zakharov family") {
    const double alpha = 0.8, a = 0.3, b = 0.2;
    const double omega = alpha * alpha * ky * ky + 4.0 * alpha * (b - a) * kx * ky + 4.0 * (a * a - 2.0 * a * b - b) * kx * kx;
    FieldMap f{{"q", wave}, {"p", ScalarField(g)}, {"v", ScalarField(g)}, {"p_t", ScalarField(g)}};
    f["q_t"] = cplx(0.0, -omega) * wave;
    CHECK(worst_relative(EquationId::make("zakharov_general", {{"alpha", alpha}, {"a", a}, {"b", b}}), f) <= 1e-13);
  }
  SUBCASE("derivative NLS on a line") {
    const Grid line = Grid::line(32, kTwoPi);
    const ScalarField w = ScalarField::sample(line, [&](double x, double, double) { return cis(kx * x); });
    FieldMap f{{"q", w}, {"p", ScalarField(line)}, {"p_t", ScalarField(line)}};
    f["q_t"] = cplx(0.0, -kx * kx) * w;
    CHECK(worst_relative(EquationId::make("dnls_a"), f) <= 1e-13);
    CHECK(worst_relative(EquationId::make("dnls_b"), f) <= 1e-13);
  }
}

TEST_CASE("static and compatible configurations") {
  const Grid g = Grid::plane(32, 32, kTwoPi, kTwoPi);
  Rng rng(10);
  SUBCASE("real mKdV: y-independent data is static") {
    const Grid line = Grid::line(32, kTwoPi);
    const ScalarField q1 = random_smooth_field(line, rng, 1.0, true);
    const ScalarField q = ScalarField::sample(g, [&](double x, double, double) {
      return q1[static_cast<std::size_t>(std::lround(x / line.spacing(0))) % 32];
    });
    FieldMap f{{"q", q}, {"v1", ScalarField(g)}, {"q_t", ScalarField(g)}};
    CHECK(worst_relative(EquationId::make("mkdv_real"), f) <= 1e-13);
  }
  SUBCASE("plane compatibility along the diagonal") {
    auto along = [&](double kk) {
      return ScalarField::sample(g, [&](double x, double y, double) { return std::sin(kk * (x + y)); });
    };
    const ScalarField k = along(2.0), w = along(3.0);
    FieldMap f{{"k", k}, {"m3", k}, {"omega3", w}};
    f["k_t"] = derivative(w, 0);
    f["m3_t"] = derivative(w, 1);
    CHECK(worst_relative(EquationId::make("mlxii_plane"), f) <= 1e-13);
  }
  SUBCASE("Strachan system is the d = 0 member of its family") {
    FieldMap f;
    for (const char* n : {"q", "p", "v", "q_t", "p_t"}) f[n] = random_smooth_field(g, rng);
    for (double c : {1.0, -0.5}) {
      const auto s = pde_components(EquationId::make("strachan", {{"c", c}}), f);
      const auto m = pde_components(EquationId::make("m3q", {{"c", c}, {"d", 0.0}}), f);
      REQUIRE(s.size() == m.size());
      for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(lp_norms(s[i].residual() - m[i].residual()).linf <= 1e-13 * lp_norms(s[i].lhs).linf);
      const auto d1 = pde_components(EquationId::make("m3q", {{"c", c}, {"d", 1.0}}), f);
      CHECK(lp_norms(s[0].residual() - d1[0].residual()).linf > 1e-3);
    }
  }
}
