#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdyred/solvers.hpp"

namespace sdyred {

struct ScenarioOptions {
  std::vector<int> grid;               // empty: scenario default
  std::optional<double> dt, t_end;     // defaults per scenario
  std::optional<int> record_every;
  std::uint64_t seed = 1;
  double amplitude = 0.1;              // random scenario only
  std::map<std::string, double> params;  // equation parameter overrides
};

struct Scenario {
  std::string equation;
  std::string name;
  SolverConfig cfg;
  FieldMap initial;
  // Exact solution of the primary field at time t, when known.
  std::function<ScalarField(double)> exact;
  std::string primary;  // "phi", "k" or "s3"
};

std::vector<std::string> scenario_names();  // zero, plane_wave, sech_soliton, line_soliton, random
std::vector<std::string> solver_equations();  // nls, zakharov, kp, m1_spin
bool scenario_supported(const std::string& equation, const std::string& scenario);

// Throws PreconditionError on an unknown or unsupported pairing.
Scenario make_scenario(const std::string& equation, const std::string& scenario, const ScenarioOptions& opt = {});

struct ScenarioResult {
  TimeSeriesOutput series;
  // Relative L2 distance to the exact solution at the final time (absolute
  // L-infinity for an identically zero exact solution).
  std::optional<double> final_error;
  // Relative change of each conserved quantity per unit time, worst over the run.
  std::map<std::string, double> drift_rate;
};

ScenarioResult run_scenario(const Scenario& sc);

// Relative L2 distance between fields, or absolute L-infinity if b is zero.
double field_error(const ScalarField& a, const ScalarField& b);

}  // namespace sdyred
