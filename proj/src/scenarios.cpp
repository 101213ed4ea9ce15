#include "sdyred/scenarios.hpp"

#include <algorithm>
#include <cmath>

#include "sdyred/errors.hpp"
#include "sdyred/random_fields.hpp"

namespace sdyred {

namespace {

const std::map<std::string, std::vector<std::string>>& pairings() {
  static const std::map<std::string, std::vector<std::string>> p = {
      {"nls", {"zero", "plane_wave", "sech_soliton", "random"}},
      {"zakharov", {"zero", "plane_wave", "sech_soliton", "random"}},
      {"kp", {"zero", "line_soliton", "random"}},
      {"m1_spin", {"zero", "sech_soliton", "random"}},
  };
  return p;
}

// Maps s into [-L/2, L/2).
double wrap(double s, double length) { return s - length * std::floor(s / length + 0.5); }

double sech(double s) { return 1.0 / std::cosh(s); }

struct Timing {
  double dt, t_end;
  int record_every;
};

// Fills dt and t_end; when only t_end is known the nominal step is rounded so
// that t_end is an integer number of steps.
Timing timing(const ScenarioOptions& o, double dt_nominal, double t_end_default, int record_default) {
  Timing t{dt_nominal, o.t_end.value_or(t_end_default), o.record_every.value_or(record_default)};
  if (o.dt) {
    t.dt = *o.dt;
  } else if (t.t_end > 0.0) {
    t.dt = t.t_end / std::max(1.0, std::round(t.t_end / dt_nominal));
  }
  return t;
}

Grid pick_grid(const ScenarioOptions& o, const std::vector<int>& def, const std::vector<double>& lengths) {
  std::vector<int> n = o.grid.empty() ? def : o.grid;
  if (n.size() != def.size())
    throw PreconditionError("grid needs " + std::to_string(def.size()) + " size(s) for this equation");
  for (int s : n)
    if (s < 4) throw PreconditionError("grid sizes must be at least 4");
  return Grid(n, lengths);
}

void finish_cfg(Scenario& sc, const EquationId& eq, const Grid& g, const Timing& t) {
  sc.cfg.equation = eq;
  sc.cfg.grid = g;
  sc.cfg.dt = t.dt;
  sc.cfg.t_end = t.t_end;
  sc.cfg.method = default_method(eq.kind);
  sc.cfg.record_every = t.record_every;
}

// Spin data depending on x + y only keeps s_x x s_y = 0, so u vanishes
// identically and the nonlocal constraint is satisfied exactly.
void require_diagonal(const Grid& g) {
  if (g.size(0) != g.size(1) || g.length(0) != g.length(1))
    throw PreconditionError("x+y scenarios need equal sizes and lengths along x and y");
}

ScalarField along_diagonal(const Grid& g, const ScalarField& line) {
  ScalarField f(g);
  const int n = g.size(0);
  for (std::size_t p = 0; p < g.points(); ++p) f[p] = line[static_cast<std::size_t>((g.index_along(p, 0) + g.index_along(p, 1)) % n)];
  return f;
}

Scenario nls_scenario(const std::string& name, const ScenarioOptions& o) {
  const EquationId eq = EquationId::make("nls", o.params);
  const double r2 = eq.param("r2"), length = 40.0;
  const Grid g = pick_grid(o, {256}, {length});
  Scenario sc;
  sc.primary = "phi";
  if (name == "zero") {
    sc.initial["phi"] = ScalarField(g);
    sc.exact = [g](double) { return ScalarField(g); };
    finish_cfg(sc, eq, g, timing(o, 1e-3, 1.0, 20));
  } else if (name == "plane_wave") {
    const double amp = 0.5, k = 2.0 * 2.0 * M_PI / length;
    const double omega = 2.0 * r2 * amp * amp - k * k;
    sc.exact = [g, amp, k, omega](double t) {
      return ScalarField::sample(g, [&](double x, double, double) { return amp * std::exp(cplx(0.0, k * x - omega * t)); });
    };
    sc.initial["phi"] = sc.exact(0.0);
    finish_cfg(sc, eq, g, timing(o, 1e-3, 1.0, 20));
  } else if (name == "sech_soliton") {
    if (r2 != 1.0) throw PreconditionError("the bright sech soliton needs r2 = +1");
    const double a = 1.0;
    sc.exact = [g, a, length](double t) {
      return ScalarField::sample(g, [&](double x, double, double) {
        return a * sech(a * wrap(x - 0.5 * length, length)) * std::exp(cplx(0.0, -a * a * t));
      });
    };
    sc.initial["phi"] = sc.exact(0.0);
    finish_cfg(sc, eq, g, timing(o, 1e-3, 2.0 * M_PI / (a * a), 20));
  } else {
    Rng rng(o.seed);
    sc.initial["phi"] = random_smooth_field(g, rng, o.amplitude, false, 8);
    finish_cfg(sc, eq, g, timing(o, 1e-3, 1.0, 20));
  }
  return sc;
}

Scenario zakharov_scenario(const std::string& name, const ScenarioOptions& o) {
  const EquationId eq = EquationId::make("zakharov", o.params);
  const double r2 = eq.param("r2"), length = 8.0 * M_PI;
  const Grid g = pick_grid(o, {64, 64}, {length, length});
  Scenario sc;
  sc.primary = "phi";
  if (name == "zero") {
    sc.initial["phi"] = ScalarField(g);
    sc.exact = [g](double) { return ScalarField(g); };
  } else if (name == "plane_wave") {
    // |phi| constant gives v = 0; i phi_t = phi_xy = -kx ky phi.
    const double amp = 0.5, kx = 2.0 * M_PI / length, ky = 2.0 * 2.0 * M_PI / length;
    sc.exact = [g, amp, kx, ky](double t) {
      return ScalarField::sample(g, [&](double x, double y, double) {
        return amp * std::exp(cplx(0.0, kx * x + ky * y + kx * ky * t));
      });
    };
    sc.initial["phi"] = sc.exact(0.0);
  } else if (name == "sech_soliton") {
    if (r2 != 1.0) throw PreconditionError("the bright sech soliton needs r2 = +1");
    if (g.size(0) != g.size(1) || g.length(0) != g.length(1))
      throw PreconditionError("the x+y soliton needs equal sizes and lengths along x and y");
    // phi = f(x + y + kappa t) exp(i (kappa y + omega t)), f = a sech(a .),
    // v = 2 (f^2 - M), omega = 2 M - a^2 with M the x-mean of f^2.
    const double a = 1.0, kappa = 2.0 * M_PI / length;
    auto f = [a, length](double s) { return a * sech(a * wrap(s - 0.5 * length, length)); };
    double m = 0.0;
    for (int i = 0; i < g.size(0); ++i) m += std::pow(f(g.coord(0, i)), 2);
    m /= g.size(0);
    const double omega = 2.0 * m - a * a;
    sc.exact = [g, f, kappa, omega](double t) {
      return ScalarField::sample(g, [&](double x, double y, double) {
        return f(x + y + kappa * t) * std::exp(cplx(0.0, kappa * y + omega * t));
      });
    };
    sc.initial["phi"] = sc.exact(0.0);
  } else {
    // The constraint is solvable on a periodic domain only if the x-mean of
    // (|phi|^2)_y vanishes. Data depending on x + y keep that for all time.
    require_diagonal(g);
    Rng rng(o.seed);
    const Grid line = Grid::line(g.size(0), length);
    sc.initial["phi"] = along_diagonal(g, random_smooth_field(line, rng, o.amplitude, false, 4));
  }
  finish_cfg(sc, eq, g, timing(o, 1e-3, 1.0, 10));
  return sc;
}

Scenario kp_scenario(const std::string& name, const ScenarioOptions& o) {
  const EquationId eq = EquationId::make("kp", o.params);
  const double lx = 50.0, ly = 20.0;
  const Grid g = pick_grid(o, {256, 32}, {lx, ly});
  Scenario sc;
  sc.primary = "k";
  if (name == "zero") {
    sc.initial["k"] = ScalarField(g);
    sc.exact = [g](double) { return ScalarField(g); };
    finish_cfg(sc, eq, g, timing(o, 0.01, 1.0, 5));
  } else if (name == "line_soliton") {
    // KdV soliton S = 2 kappa^2 sech^2(kappa x) on the background -M that
    // removes its x-mean; the background shifts the speed to 4 kappa^2 - 6 M.
    const double kappa = 0.5;
    auto s = [kappa, lx](double x) { return 2.0 * kappa * kappa * std::pow(sech(kappa * wrap(x - 0.5 * lx, lx)), 2); };
    double m = 0.0;
    for (int i = 0; i < g.size(0); ++i) m += s(g.coord(0, i));
    m /= g.size(0);
    const double speed = 4.0 * kappa * kappa - 6.0 * m;
    sc.exact = [g, s, m, speed](double t) {
      return ScalarField::sample(g, [&](double x, double, double) { return cplx(s(x - speed * t) - m); });
    };
    sc.initial["k"] = sc.exact(0.0);
    finish_cfg(sc, eq, g, timing(o, 0.005, lx / speed, 20));
  } else {
    // Few modes: the nonlocal term oscillates at 3 alpha^2 ky^2 / kx, which
    // is fast for the smallest kx.
    Rng rng(o.seed);
    sc.initial["k"] = random_zero_mean_x_field(g, rng, o.amplitude, true, 2);
    finish_cfg(sc, eq, g, timing(o, 0.005, 1.0, 1));
  }
  return sc;
}

Scenario spin_scenario(const std::string& name, const ScenarioOptions& o) {
  const EquationId eq = EquationId::make("m1_spin", o.params);
  const double length = 8.0 * M_PI;
  const Grid g = pick_grid(o, {64, 64}, {length, length});
  Scenario sc;
  sc.primary = "s3";
  SpinField s;
  if (name == "zero") {
    s = SpinField::constant(g, 0.0, 0.0, 1.0);
    sc.exact = [g](double) { return ScalarField(g, 1.0); };
  } else {
    require_diagonal(g);
    const Grid line = Grid::line(g.size(0), length);
    ScalarField theta(line), psi(line);
    if (name == "sech_soliton") {
      // Small-amplitude image of the sech profile: s1 + i s2 ~ eps sech(xi) exp(i kappa xi).
      // The profile is periodized by summing shifted copies, so it is smooth
      // across the domain boundary.
      const double eps = 0.3, a = 0.5, kappa = 2.0 * M_PI / length;
      for (int i = 0; i < line.size(0); ++i) {
        const double xi = line.coord(0, i), c = wrap(xi - 0.5 * length, length);
        double prof = 0.0;
        for (int m = -3; m <= 3; ++m) prof += sech(a * (c + m * length));
        theta[static_cast<std::size_t>(i)] = eps * prof;
        psi[static_cast<std::size_t>(i)] = kappa * xi;
      }
    } else {
      Rng rng(o.seed);
      theta = random_smooth_field(line, rng, o.amplitude, true) + cplx(0.5);
      psi = random_smooth_field(line, rng, 1.0, true);
    }
    s = SpinField::from_angles(along_diagonal(g, theta), along_diagonal(g, psi));
  }
  sc.initial = {{"s1", s.s1}, {"s2", s.s2}, {"s3", s.s3}};
  finish_cfg(sc, eq, g, timing(o, 1e-3, 1.0, 10));
  return sc;
}

}  // namespace

std::vector<std::string> scenario_names() { return {"zero", "plane_wave", "sech_soliton", "line_soliton", "random"}; }

std::vector<std::string> solver_equations() {
  std::vector<std::string> out;
  for (const auto& [eq, list] : pairings()) out.push_back(eq);
  return out;
}

bool scenario_supported(const std::string& equation, const std::string& scenario) {
  auto it = pairings().find(equation);
  return it != pairings().end() && std::count(it->second.begin(), it->second.end(), scenario) > 0;
}

Scenario make_scenario(const std::string& equation, const std::string& scenario, const ScenarioOptions& opt) {
  if (!pairings().count(equation)) throw PreconditionError("no solver for equation " + equation);
  if (!scenario_supported(equation, scenario))
    throw PreconditionError("scenario " + scenario + " is not available for " + equation);
  Scenario sc;
  if (equation == "nls") sc = nls_scenario(scenario, opt);
  else if (equation == "zakharov") sc = zakharov_scenario(scenario, opt);
  else if (equation == "kp") sc = kp_scenario(scenario, opt);
  else sc = spin_scenario(scenario, opt);
  sc.equation = equation;
  sc.name = scenario;
  sc.cfg.validate();
  return sc;
}

double field_error(const ScalarField& a, const ScalarField& b) {
  const double nb = lp_norms(b).l2;
  if (nb == 0.0) return lp_norms(a).linf;
  return lp_norms(a - b).l2 / nb;
}

ScenarioResult run_scenario(const Scenario& sc) {
  ScenarioResult r;
  r.series = solve(sc.initial, sc.cfg);
  const Frame& last = r.series.snapshots.back();
  if (sc.exact) r.final_error = field_error(last.fields.at(sc.primary), sc.exact(last.t));
  const auto& c = r.series.conserved;
  const double span = std::max(sc.cfg.t_end, 1e-300);
  for (const auto& [name, q0] : c.front().values) {
    const double denom = std::abs(q0) > 1e-12 ? std::abs(q0) : 1.0;
    double worst = 0.0;
    for (const auto& s : c) worst = std::max(worst, std::abs(s.values.at(name) - q0) / denom);
    r.drift_rate[name] = worst / span;
  }
  return r;
}

}  // namespace sdyred
