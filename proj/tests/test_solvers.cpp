#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

#include "sdyred/errors.hpp"
#include "sdyred/random_fields.hpp"
#include "sdyred/scenarios.hpp"
#include "sdyred/snapshot.hpp"

using namespace sdyred;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double linf(const ScalarField& f) { return lp_norms(f).linf; }

SolverConfig config(const std::string& eq, const Grid& g, double dt, double t_end, int record_every = 1,
                    const std::map<std::string, double>& params = {}) {
  SolverConfig c;
  c.equation = EquationId::make(eq, params);
  c.grid = g;
  c.dt = dt;
  c.t_end = t_end;
  c.method = default_method(c.equation.kind);
  c.record_every = record_every;
  return c;
}

const ScalarField& last(const TimeSeriesOutput& out, const std::string& name) {
  return out.snapshots.back().fields.at(name);
}

double mass(const ScalarField& f) { return integrate(abs2(f)).real(); }

}  // namespace

TEST_CASE("solver configuration") {
  const Grid line = Grid::line(32, kTwoPi);
  SolverConfig c = config("nls", line, 0.01, 0.1);
  CHECK(c.steps() == 10);
  CHECK_NOTHROW(c.validate());
  SUBCASE("non-integer step count") {
    c.t_end = 0.105;
    CHECK_THROWS_AS(c.validate(), PreconditionError);
  }
  SUBCASE("bad step and cadence") {
    c.dt = 0.0;
    CHECK_THROWS_AS(c.validate(), PreconditionError);
    c.dt = 0.01;
    c.record_every = 0;
    CHECK_THROWS_AS(c.validate(), PreconditionError);
  }
  SUBCASE("method must match the equation") {
    c.method = SolverMethod::rk4_pseudospectral;
    CHECK_THROWS_AS(c.validate(), PreconditionError);
  }
  SUBCASE("grid dimension must match") {
    c.grid = Grid::plane(8, 8, 1.0, 1.0);
    CHECK_THROWS_AS(c.validate(), DimensionError);
  }
  CHECK(default_method(Equation::kp) == SolverMethod::rk4_pseudospectral);
  CHECK(default_method(Equation::m1_spin) == SolverMethod::projected_rk4);
  CHECK(parse_solver_method(to_string(SolverMethod::splitstep2)) == SolverMethod::splitstep2);
  CHECK_THROWS_AS(solve({{"phi", ScalarField(line)}}, config("ds", Grid::plane(8, 8, 1, 1), 0.1, 0.1)),
                  PreconditionError);
}

TEST_CASE("snapshot cadence") {
  const Grid line = Grid::line(32, kTwoPi);
  for (int every : {1, 3, 4, 10, 11}) {
    CAPTURE(every);
    const TimeSeriesOutput out = solve_nls(ScalarField(line), 1.0, config("nls", line, 0.01, 0.1, every));
    CHECK(out.steps == 10);
    CHECK(out.snapshots.size() == static_cast<std::size_t>(10 / every + 1));
    CHECK(out.conserved.size() == out.snapshots.size());
    CHECK(out.record_interval == doctest::Approx(0.01 * every));
    for (std::size_t i = 0; i < out.snapshots.size(); ++i)
      CHECK(out.snapshots[i].t == doctest::Approx(0.01 * every * static_cast<double>(i)));
  }
}

TEST_CASE("zero data stays zero") {
  SUBCASE("nls") {
    const Grid g = Grid::line(64, kTwoPi);
    const auto out = solve_nls(ScalarField(g), 1.0, config("nls", g, 0.01, 0.1));
    for (const auto& s : out.snapshots) CHECK(s.fields.at("phi").is_zero());
  }
  SUBCASE("zakharov") {
    const Grid g = Grid::plane(16, 16, kTwoPi, kTwoPi);
    const auto out = solve_zakharov(ScalarField(g), -1.0, config("zakharov", g, 0.01, 0.1, 1, {{"r2", -1.0}}));
    for (const auto& s : out.snapshots) {
      CHECK(s.fields.at("phi").is_zero());
      CHECK(s.fields.at("v").is_zero());
    }
  }
  SUBCASE("kp") {
    const Grid g = Grid::plane(32, 8, kTwoPi, kTwoPi);
    const auto out = solve_kp(ScalarField(g), config("kp", g, 0.01, 0.1));
    for (const auto& s : out.snapshots) CHECK(linf(s.fields.at("k")) == 0.0);
  }
  SUBCASE("constant spin") {
    const Grid g = Grid::plane(16, 16, kTwoPi, kTwoPi);
    const SpinField s = SpinField::constant(g, 0.6, 0.0, 0.8);
    const auto out = solve_mi(s, config("m1_spin", g, 0.01, 0.1));
    CHECK(linf(last(out, "s1") - s.s1) <= 1e-15);
    CHECK(linf(last(out, "s3") - s.s3) <= 1e-15);
  }
}

TEST_CASE("NLS split-step") {
  const Grid g = Grid::line(256, 40.0);

  SUBCASE("plane wave is reproduced to round-off") {
    for (double r2 : {1.0, -1.0}) {
      ScenarioOptions o;
      o.params = {{"r2", r2}};
      const ScenarioResult r = run_scenario(make_scenario("nls", "plane_wave", o));
      REQUIRE(r.final_error);
      CHECK(*r.final_error <= 1e-11);
    }
  }

  SUBCASE("one step is an isometry") {
    Rng rng(4);
    const ScalarField phi = random_smooth_field(g, rng, 0.8);
    const auto out = solve_nls(phi, 1.0, config("nls", g, 0.01, 0.01));
    CHECK(std::abs(mass(last(out, "phi")) - mass(phi)) <= 1e-14 * mass(phi));
  }

  SUBCASE("time reversal through conjugation") {
    Rng rng(5);
    const ScalarField phi = random_smooth_field(g, rng, 0.8, false, 8);
    const SolverConfig c = config("nls", g, 0.005, 0.5, 100);
    const ScalarField forward = last(solve_nls(phi, 1.0, c), "phi");
    const ScalarField back = conj(last(solve_nls(conj(forward), 1.0, c), "phi"));
    CHECK(linf(forward - phi) > 1e-3);
    CHECK(linf(back - phi) <= 1e-8 * linf(phi));
  }

  SUBCASE("second-order convergence in time") {
    const Scenario sc = make_scenario("nls", "sech_soliton");
    auto error_at = [&](double dt) {
      SolverConfig c = sc.cfg;
      c.dt = dt;
      c.t_end = 1.0;
      c.record_every = static_cast<int>(std::lround(1.0 / dt));
      return field_error(last(solve(sc.initial, c), "phi"), sc.exact(1.0));
    };
    const double e1 = error_at(0.04), e2 = error_at(0.02), e3 = error_at(0.01);
    CHECK(std::log2(e1 / e2) >= 1.9);
    CHECK(std::log2(e2 / e3) >= 1.9);
  }
}

TEST_CASE("Zakharov split-step") {
  SUBCASE("y-independent data is frozen") {
    const Grid g = Grid::plane(32, 16, kTwoPi, kTwoPi);
    Rng rng(6);
    const ScalarField line = random_smooth_field(Grid::line(32, kTwoPi), rng);
    ScalarField phi(g);
    for (std::size_t p = 0; p < g.points(); ++p) phi[p] = line[static_cast<std::size_t>(g.index_along(p, 0))];
    const auto out = solve_zakharov(phi, 1.0, config("zakharov", g, 0.01, 0.2, 20));
    CHECK(linf(last(out, "phi") - phi) <= 1e-13);
    CHECK(linf(last(out, "v")) <= 1e-13);
  }
  SUBCASE("mass is conserved") {
    ScenarioOptions o;
    o.t_end = 0.5;
    const ScenarioResult r = run_scenario(make_scenario("zakharov", "random", o));
    CHECK(r.drift_rate.at("mass") <= 1e-12);
  }
}

TEST_CASE("KP integrating-factor RK4") {
  SUBCASE("a small Fourier mode follows the linear dispersion relation") {
    const Grid g = Grid::plane(64, 16, kTwoPi, kTwoPi);
    const double eps = 1e-8, a = 1.0, b = 1.0;
    for (double alpha : {1.0, 0.5}) {
      const double omega = -a * a * a + 3.0 * alpha * alpha * b * b / a;
      auto mode = [&](double t) {
        return ScalarField::sample(g, [&](double x, double y, double) { return cplx(eps * std::cos(a * x + b * y - omega * t)); });
      };
      const auto out = solve_kp(mode(0.0), config("kp", g, 0.01, 1.0, 100, {{"alpha", alpha}}));
      CHECK(linf(last(out, "k") - mode(1.0)) <= 1e-6 * eps);
    }
  }
  SUBCASE("fourth-order self-convergence") {
    const Scenario sc = make_scenario("kp", "line_soliton");
    auto run = [&](double dt) {
      SolverConfig c = sc.cfg;
      c.dt = dt;
      c.t_end = 2.0;
      c.record_every = static_cast<int>(std::lround(2.0 / dt));
      return last(solve(sc.initial, c), "k");
    };
    const ScalarField k1 = run(0.04), k2 = run(0.02), k3 = run(0.01);
    const double d1 = linf(k1 - k2), d2 = linf(k2 - k3);
    CHECK(std::log2(d1 / d2) >= 3.8);
  }
  SUBCASE("reconstructed m3 satisfies its constraint") {
    ScenarioOptions o;
    o.t_end = 0.05;
    const ScenarioResult r = run_scenario(make_scenario("kp", "random", o));
    const FieldMap& f = r.series.snapshots.back().fields;
    CHECK(linf(derivative(f.at("m3"), 0) - derivative(f.at("k"), 1)) <= 1e-12 * (1.0 + linf(derivative(f.at("k"), 1))));
  }
}

TEST_CASE("spin solver keeps unit length") {
  ScenarioOptions o;
  o.t_end = 0.2;
  const ScenarioResult r = run_scenario(make_scenario("m1_spin", "random", o));
  const int steps = r.series.steps;
  CHECK(r.series.max_norm_drift / steps <= 1e-8);
  for (const auto& fr : r.series.snapshots) {
    const SpinField s{fr.fields.at("s1"), fr.fields.at("s2"), fr.fields.at("s3")};
    CHECK(s.norm_violation() <= 1e-13);
  }
  CHECK(r.series.snapshots.back().fields.count("u") == 1);
}

TEST_CASE("closure of recorded time series") {
  const ScenarioResult r = run_scenario(make_scenario("nls", "sech_soliton"));
  const ResidualReport rep = closure_residual(r.series);
  CHECK(rep.passed);
  CHECK(rep.worst() <= 1e-5);

  TimeSeriesOutput short_run = r.series;
  short_run.snapshots.resize(4);
  CHECK_THROWS_AS(closure_residual(short_run), PreconditionError);

  // Corrupting one interior frame is detected.
  TimeSeriesOutput bad = r.series;
  auto& phi = bad.snapshots[bad.snapshots.size() / 2].fields.at("phi");
  phi = 1.01 * phi;
  CHECK_FALSE(closure_residual(bad).passed);
}

TEST_CASE("conserved quantities") {
  const Grid line = Grid::line(16, 40.0);
  CHECK(conserved_monitor(EquationId::make("nls"), {{"phi", ScalarField(line, 2.0)}}).at("mass") ==
        doctest::Approx(160.0));
  const Grid g = Grid::plane(8, 8, 2.0, 3.0);
  const auto kp = conserved_monitor(EquationId::make("kp"), {{"k", ScalarField(g, 2.0)}});
  CHECK(kp.at("momentum") == doctest::Approx(12.0));
  CHECK(kp.at("energy") == doctest::Approx(24.0));
  const SpinField s = SpinField::constant(g, 0.0, 0.6, 0.8);
  const auto spin = conserved_monitor(EquationId::make("m1_spin"), {{"s1", s.s1}, {"s2", s.s2}, {"s3", s.s3}});
  CHECK(spin.at("spin1") == doctest::Approx(0.0));
  CHECK(spin.at("spin3") == doctest::Approx(4.8));
  CHECK(conserved_monitor(EquationId::make("ds"), {}).empty());
  CHECK_THROWS_AS(conserved_monitor(EquationId::make("nls"), {}), PreconditionError);
}

TEST_CASE("five-point time derivative is exact for quartics") {
  const Grid line = Grid::line(8, 1.0);
  const double h = 0.1, t0 = 0.3;
  auto poly = [](double t) { return 2.0 * std::pow(t, 4) - t * t * t + 0.5 * t; };
  auto at = [&](double t) { return ScalarField(line, poly(t)); };
  const ScalarField d = central_difference5(at(t0 - 2 * h), at(t0 - h), at(t0 + h), at(t0 + 2 * h), h);
  const double want = 8.0 * std::pow(t0, 3) - 3.0 * t0 * t0 + 0.5;
  CHECK(std::abs(d[0].real() - want) <= 1e-12);
}

TEST_CASE("time series files") {
  const auto dir = std::filesystem::temp_directory_path() / "sdyred_test_series";
  std::filesystem::remove_all(dir);
  ScenarioOptions o;
  o.t_end = 0.02;
  o.record_every = 10;
  const ScenarioResult r = run_scenario(make_scenario("zakharov", "plane_wave", o));
  write_time_series(dir.string(), r.series);
  const Snapshot s = read_snapshot((dir / "phi_00002.snap").string());
  CHECK(s.name == "phi");
  CHECK(s.time == doctest::Approx(0.02));
  CHECK(linf(s.field - last(r.series, "phi")) == 0.0);
  CHECK(std::filesystem::exists(dir / "v_00000.snap"));
  CHECK(std::filesystem::exists(dir / "conserved.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("scenario catalogue") {
  for (const auto& eq : solver_equations())
    for (const auto& sc : scenario_names()) {
      CAPTURE(eq);
      CAPTURE(sc);
      if (scenario_supported(eq, sc)) {
        const Scenario s = make_scenario(eq, sc);
        CHECK(s.cfg.method == default_method(s.cfg.equation.kind));
        CHECK(s.initial.count(s.primary == "s3" ? "s1" : s.primary) == 1);
      } else {
        CHECK_THROWS_AS(make_scenario(eq, sc), PreconditionError);
      }
    }
  CHECK_THROWS_AS(make_scenario("ds", "zero"), PreconditionError);
  ScenarioOptions o;
  o.grid = {64, 32};
  CHECK_THROWS_AS(make_scenario("zakharov", "random", o), PreconditionError);
  o.grid = {64};
  CHECK_THROWS_AS(make_scenario("zakharov", "zero", o), PreconditionError);
  o.params = {{"r2", -1.0}};
  o.grid = {};
  CHECK_THROWS_AS(make_scenario("nls", "sech_soliton", o), PreconditionError);
}
