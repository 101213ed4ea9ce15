#pragma once

#include <map>
#include <string>
#include <vector>

#include "sdyred/ansatz.hpp"
#include "sdyred/equations.hpp"

namespace sdyred {

enum class SolverMethod { splitstep2, rk4_pseudospectral, projected_rk4 };
SolverMethod parse_solver_method(const std::string& s);
const char* to_string(SolverMethod m);
// The integrator used for an equation: nls, zakharov -> splitstep2; kp -> rk4_pseudospectral;
// m1_spin -> projected_rk4. Other equations have no solver.
SolverMethod default_method(Equation e);

struct SolverConfig {
  EquationId equation;
  Grid grid;
  double dt = 1e-3;
  double t_end = 1.0;
  SolverMethod method = SolverMethod::splitstep2;
  bool dealias = false;
  int record_every = 1;

  int steps() const;  // t_end / dt, which must be an integer within rounding
  // Throws PreconditionError for invalid settings.
  void validate() const;
};

struct Frame {
  double t = 0.0;
  FieldMap fields;  // prognostic fields plus reconstructed auxiliaries
};

struct ConservedSample {
  double t = 0.0;
  std::map<std::string, double> values;
};

struct TimeSeriesOutput {
  EquationId equation;
  std::vector<Frame> snapshots;
  std::vector<ConservedSample> conserved;
  int steps = 0;
  double record_interval = 0.0;
  // Spin solver only: largest | |s| - 1 | seen before any renormalization.
  double max_norm_drift = 0.0;
};

// i phi_t = phi_xx + 2 r2 |phi|^2 phi; Strang split-step.
TimeSeriesOutput solve_nls(const ScalarField& phi0, double r2, const SolverConfig& cfg);
// i phi_t = phi_xy + v phi, v = 2 r2 d_x^-1 d_y |phi|^2 (zero x-mean); Strang split-step
// with the exact spectral propagator for phi_xy.
TimeSeriesOutput solve_zakharov(const ScalarField& phi0, double r2, const SolverConfig& cfg);
// k_t + 6 k k_x + k_xxx + 3 alpha^2 m3_y = 0, m3 = d_x^-1 k_y; alpha from cfg.equation.
// Integrating-factor RK4; the linear part, including the nonlocal term, is exact.
TimeSeriesOutput solve_kp(const ScalarField& k0, const SolverConfig& cfg);
// s_t = (s x s_y + u s)_x, u_x = -s . (s_x x s_y); RK4 then projection onto |s| = 1.
TimeSeriesOutput solve_mi(const SpinField& s0, const SolverConfig& cfg);

// Dispatches on cfg.equation. Required initial fields: phi (nls, zakharov), k (kp),
// s1, s2, s3 (m1_spin).
TimeSeriesOutput solve(const FieldMap& initial, const SolverConfig& cfg);

// Mass for nls/zakharov, momentum and energy for kp, integrated spin components
// for m1_spin; empty for other equations.
std::map<std::string, double> conserved_monitor(const EquationId& eq, const FieldMap& fields);

// Fourth-order central difference from five equally spaced samples centred on the middle one.
ScalarField central_difference5(const ScalarField& fm2, const ScalarField& fm1, const ScalarField& fp1,
                                const ScalarField& fp2, double spacing);

// Evaluates pde_components on every interior snapshot (two neighbours on each
// side), with time derivatives of the rate fields from central_difference5.
// Each component reports its worst value over the snapshots. A component is
// measured relative to its own terms, but never to less than
// kSystemScaleFraction of the largest term in the system, so constraints whose
// sides both vanish are not judged on rounding noise alone.
inline constexpr double kSystemScaleFraction = 1e-6;
ResidualReport closure_residual(const TimeSeriesOutput& out, double tolerance = 1e-5,
                                DiffMethod method = DiffMethod::spectral);

// Snapshot files <dir>/<field>_<index>.snap and <dir>/conserved.csv (t,name,value).
void write_time_series(const std::string& dir, const TimeSeriesOutput& out);

}  // namespace sdyred
