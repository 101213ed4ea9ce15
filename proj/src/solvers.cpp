#include "sdyred/solvers.hpp"

#include <algorithm>
#include <cmath>

#include "sdyred/errors.hpp"
#include "sdyred/fft.hpp"

namespace sdyred {

SolverMethod parse_solver_method(const std::string& s) {
  if (s == "splitstep2") return SolverMethod::splitstep2;
  if (s == "rk4_pseudospectral") return SolverMethod::rk4_pseudospectral;
  if (s == "projected_rk4") return SolverMethod::projected_rk4;
  throw PreconditionError("unknown solver method: " + s);
}

const char* to_string(SolverMethod m) {
  switch (m) {
    case SolverMethod::splitstep2: return "splitstep2";
    case SolverMethod::rk4_pseudospectral: return "rk4_pseudospectral";
    case SolverMethod::projected_rk4: return "projected_rk4";
  }
  return "?";
}

SolverMethod default_method(Equation e) {
  switch (e) {
    case Equation::nls:
    case Equation::zakharov: return SolverMethod::splitstep2;
    case Equation::kp: return SolverMethod::rk4_pseudospectral;
    case Equation::m1_spin: return SolverMethod::projected_rk4;
    default: break;
  }
  throw PreconditionError("no solver for equation " + equation_info(e).name);
}

int SolverConfig::steps() const {
  const double n = t_end / dt;
  const double r = std::round(n);
  if (std::abs(n - r) > 1e-9 * std::max(1.0, r)) throw PreconditionError("t_end must be an integer multiple of dt");
  return static_cast<int>(r);
}

void SolverConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw PreconditionError("dt must be positive");
  if (!(t_end >= 0.0)) throw PreconditionError("t_end must be non-negative");
  if (record_every < 1) throw PreconditionError("record_every must be at least 1");
  steps();
  if (method != default_method(equation.kind))
    throw PreconditionError(std::string("method ") + to_string(method) + " does not apply to " + equation.name());
  const int dims = equation_info(equation.kind).spatial_dims;
  if (grid.ndim() != dims)
    throw DimensionError(equation.name() + " needs a " + std::to_string(dims) + "-d grid");
}

namespace {

// Forward / inverse transforms and per-point wavenumbers.
class Spectral {
 public:
  explicit Spectral(const Grid& g) : g_(g), kfull_(static_cast<size_t>(g.ndim())), kodd_(static_cast<size_t>(g.ndim())) {
    for (int a = 0; a < g.ndim(); ++a) {
      auto& full = kfull_[static_cast<size_t>(a)];
      auto& odd = kodd_[static_cast<size_t>(a)];
      full.resize(g.points());
      odd.resize(g.points());
      for (std::size_t p = 0; p < g.points(); ++p) {
        const int j = g.index_along(p, a);
        full[p] = fft::wavenumber(j, g.size(a), g.length(a));
        odd[p] = fft::is_nyquist(j, g.size(a)) ? 0.0 : full[p];
      }
    }
  }

  std::vector<cplx> forward(const ScalarField& f) const {
    std::vector<cplx> v = f.values();
    fft::transform_all(v.data(), g_, -1);
    return v;
  }

  ScalarField inverse(std::vector<cplx> v) const {
    fft::transform_all(v.data(), g_, +1);
    const double n = static_cast<double>(g_.points());
    for (auto& z : v) z /= n;
    return ScalarField(g_, std::move(v));
  }

  double k(int axis, std::size_t p) const { return kfull_[static_cast<size_t>(axis)][p]; }
  double k_odd(int axis, std::size_t p) const { return kodd_[static_cast<size_t>(axis)][p]; }
  int index(int axis, std::size_t p) const {
    const int j = g_.index_along(p, axis), n = g_.size(axis);
    return j <= n / 2 ? j : j - n;
  }

 private:
  Grid g_;
  std::vector<std::vector<double>> kfull_, kodd_;
};

double max_abs(const ScalarField& f) { return lp_norms(f).linf; }

void require_finite(const ScalarField& f, double t) {
  if (!f.all_finite()) throw NumericalError("non-finite values at t = " + std::to_string(t));
}

double max_wavenumber(const Grid& g, int axis) { return M_PI / g.spacing(axis); }

TimeSeriesOutput start_output(const SolverConfig& cfg) {
  TimeSeriesOutput out;
  out.equation = cfg.equation;
  out.steps = cfg.steps();
  out.record_interval = cfg.dt * cfg.record_every;
  return out;
}

void record(TimeSeriesOutput& out, double t, FieldMap fields) {
  out.conserved.push_back({t, conserved_monitor(out.equation, fields)});
  out.snapshots.push_back({t, std::move(fields)});
}

ScalarField zakharov_potential(const ScalarField& phi, double r2) {
  return (2.0 * r2) * antiderivative_x(derivative(abs2(phi), 1), MeanPolicy::subtract);
}

}  // namespace

TimeSeriesOutput solve_nls(const ScalarField& phi0, double r2, const SolverConfig& cfg) {
  cfg.validate();
  if (cfg.equation.kind != Equation::nls) throw PreconditionError("solve_nls needs the nls equation");
  require_same_grid(phi0.grid(), cfg.grid, "nls initial data");
  // The nonlinear sub-step rotates the phase by 2 |phi|^2 dt; keep it below one radian.
  if (2.0 * std::abs(r2) * std::pow(max_abs(phi0), 2) * cfg.dt > 1.0)
    throw PreconditionError("stability bound violated: 2|phi|^2 dt > 1");

  const Spectral sp(cfg.grid);
  std::vector<cplx> lin(cfg.grid.points());
  for (std::size_t p = 0; p < lin.size(); ++p) lin[p] = std::exp(cplx(0.0, sp.k(0, p) * sp.k(0, p) * cfg.dt));
  auto half_nonlinear = [&](ScalarField& phi) {
    for (std::size_t p = 0; p < phi.size(); ++p) phi[p] *= std::exp(cplx(0.0, -r2 * std::norm(phi[p]) * cfg.dt));
  };

  TimeSeriesOutput out = start_output(cfg);
  ScalarField phi = phi0;
  record(out, 0.0, {{"phi", phi}});
  for (int n = 1; n <= out.steps; ++n) {
    half_nonlinear(phi);
    auto h = sp.forward(phi);
    for (std::size_t p = 0; p < h.size(); ++p) h[p] *= lin[p];
    phi = sp.inverse(std::move(h));
    half_nonlinear(phi);
    const double t = n * cfg.dt;
    require_finite(phi, t);
    if (n % cfg.record_every == 0) record(out, t, {{"phi", phi}});
  }
  return out;
}

TimeSeriesOutput solve_zakharov(const ScalarField& phi0, double r2, const SolverConfig& cfg) {
  cfg.validate();
  if (cfg.equation.kind != Equation::zakharov) throw PreconditionError("solve_zakharov needs the zakharov equation");
  require_same_grid(phi0.grid(), cfg.grid, "zakharov initial data");
  if (max_abs(zakharov_potential(phi0, r2)) * cfg.dt > 1.0)
    throw PreconditionError("stability bound violated: |v| dt > 1");

  const Spectral sp(cfg.grid);
  std::vector<cplx> lin(cfg.grid.points());
  for (std::size_t p = 0; p < lin.size(); ++p) lin[p] = std::exp(cplx(0.0, sp.k_odd(0, p) * sp.k_odd(1, p) * cfg.dt));
  // |phi| is invariant under the potential sub-step, so v is too.
  auto half_potential = [&](ScalarField& phi) {
    const ScalarField v = zakharov_potential(phi, r2);
    for (std::size_t p = 0; p < phi.size(); ++p) phi[p] *= std::exp(cplx(0.0, -0.5 * cfg.dt) * v[p]);
  };

  TimeSeriesOutput out = start_output(cfg);
  ScalarField phi = phi0;
  record(out, 0.0, {{"phi", phi}, {"v", zakharov_potential(phi, r2)}});
  for (int n = 1; n <= out.steps; ++n) {
    half_potential(phi);
    auto h = sp.forward(phi);
    for (std::size_t p = 0; p < h.size(); ++p) h[p] *= lin[p];
    phi = sp.inverse(std::move(h));
    half_potential(phi);
    const double t = n * cfg.dt;
    require_finite(phi, t);
    if (n % cfg.record_every == 0) record(out, t, {{"phi", phi}, {"v", zakharov_potential(phi, r2)}});
  }
  return out;
}

TimeSeriesOutput solve_kp(const ScalarField& k0, const SolverConfig& cfg) {
  cfg.validate();
  if (cfg.equation.kind != Equation::kp) throw PreconditionError("solve_kp needs the kp equation");
  require_same_grid(k0.grid(), cfg.grid, "kp initial data");
  if (max_abs_mean_x(k0) > 1e-10 * std::max(max_abs(k0), 1e-300))
    throw PreconditionError("kp initial data must have zero mean along x");
  if (6.0 * max_abs(k0) * max_wavenumber(cfg.grid, 0) * cfg.dt > 2.8)
    throw PreconditionError("stability bound violated: 6 |k| k_max dt > 2.8");

  const Grid& g = cfg.grid;
  const double a2 = std::pow(cfg.equation.param("alpha"), 2);
  const Spectral sp(g);
  const std::size_t np = g.points();
  std::vector<cplx> e_half(np), e_full(np), ikx(np);
  std::vector<char> keep(np), mask(np);
  for (std::size_t p = 0; p < np; ++p) {
    const double kx = sp.k_odd(0, p), ky = sp.k(1, p);
    keep[p] = kx != 0.0;
    const double omega = keep[p] ? kx * kx * kx - 3.0 * a2 * ky * ky / kx : 0.0;
    e_half[p] = std::exp(cplx(0.0, 0.5 * omega * cfg.dt));
    e_full[p] = e_half[p] * e_half[p];
    ikx[p] = cplx(0.0, kx);
    mask[p] = keep[p] && (!cfg.dealias || (3 * std::abs(sp.index(0, p)) <= g.size(0) &&
                                           3 * std::abs(sp.index(1, p)) <= g.size(1)));
  }

  // -6 k k_x = -3 (k^2)_x
  auto nonlinear = [&](const std::vector<cplx>& kh) {
    std::vector<cplx> in(kh);
    for (std::size_t p = 0; p < np; ++p)
      if (!mask[p]) in[p] = 0.0;
    ScalarField k = sp.inverse(std::move(in));
    for (std::size_t p = 0; p < np; ++p) k[p] = k[p] * k[p];
    auto out = sp.forward(k);
    for (std::size_t p = 0; p < np; ++p) out[p] = mask[p] ? -3.0 * ikx[p] * out[p] : cplx{};
    return out;
  };

  auto fields_of = [&](const std::vector<cplx>& kh) {
    const ScalarField k = sp.inverse(kh);
    return FieldMap{{"k", k}, {"m3", antiderivative_x(derivative(k, 1), MeanPolicy::subtract)}};
  };

  std::vector<cplx> v = sp.forward(k0);
  for (std::size_t p = 0; p < np; ++p)
    if (!keep[p]) v[p] = 0.0;

  TimeSeriesOutput out = start_output(cfg);
  record(out, 0.0, fields_of(v));
  const double dt = cfg.dt;
  std::vector<cplx> tmp(np);
  for (int n = 1; n <= out.steps; ++n) {
    const auto k1 = nonlinear(v);
    for (std::size_t p = 0; p < np; ++p) tmp[p] = e_half[p] * (v[p] + 0.5 * dt * k1[p]);
    const auto k2 = nonlinear(tmp);
    for (std::size_t p = 0; p < np; ++p) tmp[p] = e_half[p] * v[p] + 0.5 * dt * k2[p];
    const auto k3 = nonlinear(tmp);
    for (std::size_t p = 0; p < np; ++p) tmp[p] = e_full[p] * v[p] + dt * e_half[p] * k3[p];
    const auto k4 = nonlinear(tmp);
    for (std::size_t p = 0; p < np; ++p)
      v[p] = e_full[p] * v[p] + dt / 6.0 * (e_full[p] * k1[p] + 2.0 * e_half[p] * (k2[p] + k3[p]) + k4[p]);
    const double t = n * dt;
    if (n % cfg.record_every == 0 || n == out.steps) {
      FieldMap f = fields_of(v);
      require_finite(f.at("k"), t);
      if (n % cfg.record_every == 0) record(out, t, std::move(f));
    }
  }
  return out;
}

namespace {

struct Spin3 {
  ScalarField a, b, c;
};

Spin3 cross(const Spin3& x, const Spin3& y) {
  return {x.b * y.c - x.c * y.b, x.c * y.a - x.a * y.c, x.a * y.b - x.b * y.a};
}

// Expanded form s_x x s_y + s x s_xy + u_x s + u s_x: every product is
// pointwise, so s . rhs vanishes to rounding on the unit sphere and the norm
// drift reflects only the time integrator.
Spin3 spin_rhs(const Spin3& s, ScalarField* u_out = nullptr) {
  const Spin3 sx{derivative(s.a, 0), derivative(s.b, 0), derivative(s.c, 0)};
  const Spin3 sy{derivative(s.a, 1), derivative(s.b, 1), derivative(s.c, 1)};
  const Spin3 sxy{derivative(sy.a, 0), derivative(sy.b, 0), derivative(sy.c, 0)};
  const Spin3 xy = cross(sx, sy);
  const ScalarField triple = s.a * xy.a + s.b * xy.b + s.c * xy.c;
  const ScalarField u_x = mean_x(triple) - triple;
  const ScalarField u = -antiderivative_x(triple, MeanPolicy::subtract);
  if (u_out) *u_out = u;
  const Spin3 w = cross(s, sxy);
  return {xy.a + w.a + u_x * s.a + u * sx.a, xy.b + w.b + u_x * s.b + u * sx.b, xy.c + w.c + u_x * s.c + u * sx.c};
}

Spin3 axpy(const Spin3& s, double h, const Spin3& k) { return {s.a + h * k.a, s.b + h * k.b, s.c + h * k.c}; }

FieldMap spin_fields(const Spin3& s) {
  ScalarField u;
  spin_rhs(s, &u);
  return {{"s1", s.a}, {"s2", s.b}, {"s3", s.c}, {"u", u}};
}

}  // namespace

TimeSeriesOutput solve_mi(const SpinField& s0, const SolverConfig& cfg) {
  cfg.validate();
  if (cfg.equation.kind != Equation::m1_spin) throw PreconditionError("solve_mi needs the m1_spin equation");
  require_same_grid(s0.grid(), cfg.grid, "spin initial data");
  s0.require_unit();
  // Linearised about a constant spin the flow is s0 x s_xy, frequency k_x k_y.
  if (max_wavenumber(cfg.grid, 0) * max_wavenumber(cfg.grid, 1) * cfg.dt > 2.8)
    throw PreconditionError("stability bound violated: kx_max ky_max dt > 2.8");

  TimeSeriesOutput out = start_output(cfg);
  Spin3 s{real_part(s0.s1), real_part(s0.s2), real_part(s0.s3)};
  record(out, 0.0, spin_fields(s));
  const double dt = cfg.dt;
  for (int n = 1; n <= out.steps; ++n) {
    const Spin3 k1 = spin_rhs(s);
    const Spin3 k2 = spin_rhs(axpy(s, 0.5 * dt, k1));
    const Spin3 k3 = spin_rhs(axpy(s, 0.5 * dt, k2));
    const Spin3 k4 = spin_rhs(axpy(s, dt, k3));
    for (std::size_t p = 0; p < s.a.size(); ++p) {
      double v[3] = {s.a[p].real() + dt / 6.0 * (k1.a[p] + 2.0 * k2.a[p] + 2.0 * k3.a[p] + k4.a[p]).real(),
                     s.b[p].real() + dt / 6.0 * (k1.b[p] + 2.0 * k2.b[p] + 2.0 * k3.b[p] + k4.b[p]).real(),
                     s.c[p].real() + dt / 6.0 * (k1.c[p] + 2.0 * k2.c[p] + 2.0 * k3.c[p] + k4.c[p]).real()};
      const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      if (!std::isfinite(norm)) throw NumericalError("non-finite spin at t = " + std::to_string(n * dt));
      if (norm < 0.5) throw NumericalError("spin norm collapsed below 0.5 at t = " + std::to_string(n * dt));
      out.max_norm_drift = std::max(out.max_norm_drift, std::abs(norm - 1.0));
      s.a[p] = v[0] / norm;
      s.b[p] = v[1] / norm;
      s.c[p] = v[2] / norm;
    }
    if (n % cfg.record_every == 0) record(out, n * dt, spin_fields(s));
  }
  return out;
}

TimeSeriesOutput solve(const FieldMap& initial, const SolverConfig& cfg) {
  auto need = [&](const char* name) -> const ScalarField& {
    auto it = initial.find(name);
    if (it == initial.end()) throw PreconditionError(std::string("initial data lacks field ") + name);
    return it->second;
  };
  switch (cfg.equation.kind) {
    case Equation::nls: return solve_nls(need("phi"), cfg.equation.param("r2"), cfg);
    case Equation::zakharov: return solve_zakharov(need("phi"), cfg.equation.param("r2"), cfg);
    case Equation::kp: return solve_kp(need("k"), cfg);
    case Equation::m1_spin: return solve_mi(SpinField{need("s1"), need("s2"), need("s3")}, cfg);
    default: break;
  }
  throw PreconditionError("no solver for equation " + cfg.equation.name());
}

}  // namespace sdyred
