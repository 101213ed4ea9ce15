#include "cli/commands.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sdyred/curvature.hpp"
#include "sdyred/errors.hpp"
#include "sdyred/scenarios.hpp"
#include "sdyred/snapshot.hpp"

namespace sdyred::cli {

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

void write_json(const std::string& dir, const std::string& file, const nlohmann::json& j) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());
  const std::string path = dir + "/" + file;
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path);
  f << j.dump(2) << '\n';
  if (!f) throw IoError("write failed for " + path);
}

nlohmann::json check_json(const CheckResult& c) {
  nlohmann::json j = c.report.to_json();
  j["name"] = c.name;
  j["worst"] = c.report.worst();
  j["info"] = c.info;
  return j;
}

// x, then real and imaginary parts of the field (and of the oracle, if any)
// along the first grid line.
void write_profile(const std::string& path, const ScalarField& f, const ScalarField* exact) {
  std::ofstream csv(path);
  if (!csv) throw IoError("cannot write " + path);
  csv.precision(17);
  csv << "x,re,im" << (exact ? ",exact_re,exact_im" : "") << '\n';
  const Grid& g = f.grid();
  const std::size_t stride = g.stride(0);
  for (int i = 0; i < g.size(0); ++i) {
    const std::size_t p = static_cast<std::size_t>(i) * stride;
    csv << g.coord(0, i) << ',' << f[p].real() << ',' << f[p].imag();
    if (exact) csv << ',' << (*exact)[p].real() << ',' << (*exact)[p].imag();
    csv << '\n';
  }
  if (!csv) throw IoError("write failed for " + path);
}

std::string default_out(const RunConfig& cfg) { return cfg.out_dir.empty() ? std::string("sdyred_out") : cfg.out_dir; }

// ---------------------------------------------------------------- residual

// Connection entries are stored as fields named "a<mu>_<row><col>", mu = 1..4.
ResidualReport sdym_from_files(const std::vector<Snapshot>& snaps, double tol) {
  const Grid& g = snaps.front().field.grid();
  int dim = 0;
  for (const auto& s : snaps) {
    const auto& n = s.name;
    if (n.size() != 5 || n[0] != 'a' || n[1] < '1' || n[1] > '4' || n[2] != '_' || !std::isdigit(n[3]) ||
        !std::isdigit(n[4]))
      throw PreconditionError("connection files must be named a<mu>_<row><col>, got " + n);
    dim = std::max({dim, n[3] - '0' + 1, n[4] - '0' + 1});
  }
  ConnectionSet c;
  for (int a = 0; a < 4; ++a) {
    c.a[static_cast<size_t>(a)] = MatrixField(g, dim);
    c.roles[static_cast<size_t>(a)] =
        a < g.ndim() ? CoordinateRole::on_axis(a, "xi" + std::to_string(a + 1)) : CoordinateRole::absent();
  }
  for (const auto& s : snaps) c.a[static_cast<size_t>(s.name[1] - '1')].entry(s.name[3] - '0', s.name[4] - '0') = s.field;
  return sdym_residual(c, tol, NormKind::linf);
}

std::set<std::string> missing_auxiliaries(const EquationId& eq, const FieldMap& f) {
  std::set<std::string> out;
  for (const auto& [name, rel] : equation_info(eq.kind).auxiliaries)
    if (!f.count(name)) out.insert(name);
  return out;
}

}  // namespace

nlohmann::json verify_report(const RunConfig& cfg, const std::vector<CheckResult>& checks) {
  nlohmann::json j;
  j["config"] = to_json(cfg);
  nlohmann::json list = nlohmann::json::array();
  nlohmann::json wall = nlohmann::json::object();
  bool passed = true;
  int failed = 0;
  for (const auto& c : checks) {
    list.push_back(check_json(c));
    wall[c.name] = c.wall_seconds;
    if (!c.report.passed) {
      passed = false;
      ++failed;
    }
  }
  j["checks"] = list;
  j["passed"] = passed;
  j["summary"] = {{"checks", checks.size()}, {"failed", failed}};
  j["timestamp"] = {{"utc", utc_now()}, {"wall_seconds", wall}};
  return j;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (!is_suite(cfg.suite)) throw UsageError("unknown suite '" + cfg.suite + "'");
  const auto checks = run_suite(cfg.suite, cfg.seed, cfg.tolerance);
  const nlohmann::json report = verify_report(cfg, checks);
  if (!cfg.out_dir.empty()) write_json(cfg.out_dir, "report.json", report);
  out << report.dump(2) << '\n';
  return report["passed"].get<bool>() ? exit_pass : exit_fail;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.equation.empty() || cfg.scenario.empty()) throw UsageError("simulate needs --eq and --scenario");
  ScenarioOptions opt;
  opt.grid = cfg.grid;
  opt.dt = cfg.dt;
  opt.t_end = cfg.t_end;
  opt.record_every = cfg.record_every;
  opt.seed = cfg.seed;
  opt.amplitude = cfg.amplitude;
  opt.params = cfg.params;
  const Scenario sc = make_scenario(cfg.equation, cfg.scenario, opt);
  const ScenarioResult res = run_scenario(sc);

  const std::string dir = default_out(cfg);
  write_time_series(dir, res.series);
  const Frame& last = res.series.snapshots.back();
  const ScalarField& primary = last.fields.at(sc.primary);
  if (sc.exact) {
    const ScalarField exact = sc.exact(last.t);
    write_profile(dir + "/profile.csv", primary, &exact);
  } else {
    write_profile(dir + "/profile.csv", primary, nullptr);
  }

  nlohmann::json j;
  j["config"] = to_json(cfg);
  j["equation"] = sc.equation;
  j["scenario"] = sc.name;
  j["params"] = sc.cfg.equation.params;
  j["grid"] = {{"sizes", sc.cfg.grid.sizes()}, {"lengths", sc.cfg.grid.lengths()}};
  j["dt"] = sc.cfg.dt;
  j["t_end"] = sc.cfg.t_end;
  j["steps"] = res.series.steps;
  j["snapshots"] = res.series.snapshots.size();
  j["record_interval"] = res.series.record_interval;
  j["method"] = to_string(sc.cfg.method);
  j["final_error"] = res.final_error ? nlohmann::json(*res.final_error) : nlohmann::json(nullptr);
  j["drift_rate"] = res.drift_rate;
  if (sc.cfg.equation.kind == Equation::m1_spin) j["max_norm_drift"] = res.series.max_norm_drift;
  bool passed = true;
  if (res.series.snapshots.size() >= 5) {
    const ResidualReport closure = closure_residual(res.series, cfg.tolerance.value_or(1e-5));
    j["closure"] = closure.to_json();
    passed = closure.passed;
  } else {
    j["closure"] = nullptr;
  }
  j["passed"] = passed;
  write_json(dir, "summary.json", j);
  out << j.dump(2) << '\n';
  return passed ? exit_pass : exit_fail;
}

int cmd_residual(const RunConfig& cfg, std::ostream& out) {
  if (cfg.equation.empty() || cfg.files.empty()) throw UsageError("residual needs --eq and --files");
  std::vector<Snapshot> snaps;
  for (const auto& path : cfg.files) snaps.push_back(read_snapshot(path));
  for (const auto& s : snaps) {
    if (s.field.grid() != snaps.front().field.grid())
      throw DimensionError("grid of " + s.name + " (" + s.field.grid().describe() + ") differs from " +
                           snaps.front().name + " (" + snaps.front().field.grid().describe() + ")");
  }

  nlohmann::json j;
  j["config"] = to_json(cfg);
  ResidualReport rep;
  if (cfg.equation == "sdym") {
    rep = sdym_from_files(snaps, cfg.tolerance.value_or(1e-9));
    j["mode"] = "sdym";
  } else {
    const EquationId eq = EquationId::make(cfg.equation, cfg.params);
    std::map<double, FieldMap> by_time;
    for (const auto& s : snaps) {
      FieldMap& f = by_time[s.time];
      if (f.count(s.name)) throw PreconditionError("field " + s.name + " given twice at t = " + std::to_string(s.time));
      f[s.name] = s.field;
    }
    if (by_time.size() == 1) {
      ResidualOptions opt;
      opt.tolerance = cfg.tolerance.value_or(1e-8);
      opt.reconstruct = missing_auxiliaries(eq, by_time.begin()->second);
      rep = pde_residual(eq, by_time.begin()->second, opt);
      j["mode"] = "single";
      j["reconstructed"] = opt.reconstruct;
    } else {
      TimeSeriesOutput series;
      series.equation = eq;
      for (auto& [t, f] : by_time) {
        const auto missing = missing_auxiliaries(eq, f);
        series.snapshots.push_back(Frame{t, missing.empty() ? f : reconstruct_auxiliaries(eq, f, missing)});
      }
      const auto& sn = series.snapshots;
      series.record_interval = sn[1].t - sn[0].t;
      for (std::size_t i = 1; i < sn.size(); ++i)
        if (std::abs((sn[i].t - sn[i - 1].t) - series.record_interval) > 1e-9 * std::max(1.0, std::abs(sn[i].t)))
          throw PreconditionError("snapshot times must be equally spaced");
      rep = closure_residual(series, cfg.tolerance.value_or(1e-5));
      j["mode"] = "time_series";
      j["frames"] = sn.size();
    }
  }
  j["report"] = rep.to_json();
  j["passed"] = rep.passed;
  if (!cfg.out_dir.empty()) write_json(cfg.out_dir, "residual.json", j);
  out << j.dump(2) << '\n';
  return rep.passed ? exit_pass : exit_fail;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto cfg = parse_command_line(argc, argv);
    if (!cfg) return exit_pass;
    switch (cfg->command) {
      case Command::verify: return cmd_verify(*cfg, out);
      case Command::simulate: return cmd_simulate(*cfg, out);
      case Command::residual: return cmd_residual(*cfg, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << '\n';
    return exit_usage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return exit_abort;
  } catch (const DimensionError& e) {
    err << "dimension mismatch: " << e.what() << '\n';
    return exit_abort;
  } catch (const NumericalError& e) {
    err << "numerical abort: " << e.what() << '\n';
    return exit_abort;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_abort;
  }
  return exit_abort;
}

}  // namespace sdyred::cli
