#include "cli/config.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sdyred::cli {

const char* to_string(Command c) {
  switch (c) {
    case Command::verify: return "verify";
    case Command::simulate: return "simulate";
    case Command::residual: return "residual";
  }
  return "?";
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

double parse_number(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number for " + what + ": '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number for " + what + ": '" + s + "'");
  return v;
}

template <class T>
T get_as(const nlohmann::json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError("config key '" + key + "' has the wrong type");
  }
}

}  // namespace

std::vector<int> parse_grid(const std::string& s) {
  std::vector<int> out;
  for (const auto& part : split(s, ',')) {
    const double v = parse_number(part, "grid");
    if (v != static_cast<int>(v) || v < 1) throw UsageError("grid sizes must be positive integers: '" + s + "'");
    out.push_back(static_cast<int>(v));
  }
  if (out.empty() || out.size() > 3) throw UsageError("grid needs one to three sizes: '" + s + "'");
  return out;
}

std::map<std::string, double> parse_params(const std::string& s) {
  std::map<std::string, double> out;
  for (const auto& part : split(s, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("parameter must look like name=value: '" + part + "'");
    out[part.substr(0, eq)] = parse_number(part.substr(eq + 1), part.substr(0, eq));
  }
  return out;
}

void apply_config_json(RunConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "suite") cfg.suite = get_as<std::string>(v, key);
    else if (key == "eq" || key == "equation") cfg.equation = get_as<std::string>(v, key);
    else if (key == "scenario") cfg.scenario = get_as<std::string>(v, key);
    else if (key == "grid") cfg.grid = v.is_string() ? parse_grid(v.get<std::string>()) : get_as<std::vector<int>>(v, key);
    else if (key == "dt") cfg.dt = get_as<double>(v, key);
    else if (key == "t_end" || key == "t-end") cfg.t_end = get_as<double>(v, key);
    else if (key == "tol" || key == "tolerance") cfg.tolerance = get_as<double>(v, key);
    else if (key == "record_every") cfg.record_every = get_as<int>(v, key);
    else if (key == "seed") cfg.seed = get_as<std::uint64_t>(v, key);
    else if (key == "amplitude") cfg.amplitude = get_as<double>(v, key);
    else if (key == "params") {
      for (const auto& [pk, pv] : get_as<std::map<std::string, double>>(v, key)) cfg.params[pk] = pv;
    } else if (key == "files") cfg.files = get_as<std::vector<std::string>>(v, key);
    else if (key == "out") cfg.out_dir = get_as<std::string>(v, key);
    else throw UsageError("unknown config key '" + key + "'");
  }
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"Residual checks and reference solvers for reductions of the self-dual Yang-Mills equations"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "JSON file with default values for any flag");

  std::string suite, eq, scenario, grid, params, files, out;
  double dt = 0, t_end = 0, tol = 0, amplitude = 0;
  std::uint64_t seed = 0;
  int record_every = 0;

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "reductions, lax, gauge, nonisospectral, curvature or all");
  verify->add_option("--seed", seed, "Seed for random field draws");
  verify->add_option("--tol", tol, "Tolerance applied to every check");
  verify->add_option("--out", out, "Directory for report.json");

  auto* simulate = app.add_subcommand("simulate", "Integrate a scenario and write its time series");
  simulate->add_option("--eq", eq, "nls, zakharov, kp or m1_spin");
  simulate->add_option("--scenario", scenario, "zero, plane_wave, sech_soliton, line_soliton or random");
  simulate->add_option("--grid", grid, "NX or NX,NY");
  simulate->add_option("--dt", dt, "Time step");
  simulate->add_option("--t-end", t_end, "Final time");
  simulate->add_option("--record-every", record_every, "Steps between snapshots");
  simulate->add_option("--seed", seed, "Seed for the random scenario");
  simulate->add_option("--amplitude", amplitude, "Amplitude for the random scenario");
  simulate->add_option("--params", params, "Equation parameters, name=value,...");
  simulate->add_option("--tol", tol, "Tolerance for the closure check");
  simulate->add_option("--out", out, "Output directory");

  auto* residual = app.add_subcommand("residual", "Evaluate a residual on snapshot files");
  residual->add_option("--eq", eq, "Equation name, or sdym for connection files");
  residual->add_option("--files", files, "Comma-separated snapshot files");
  residual->add_option("--params", params, "Equation parameters, name=value,...");
  residual->add_option("--tol", tol, "Tolerance");
  residual->add_option("--out", out, "Directory for report.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig cfg;
  CLI::App* sub = verify->parsed() ? verify : simulate->parsed() ? simulate : residual;
  cfg.command = sub == verify ? Command::verify : sub == simulate ? Command::simulate : Command::residual;

  if (const char* env = std::getenv(kOutEnv); env && *env) cfg.out_dir = env;

  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw UsageError("cannot read config file " + config_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("config file " + config_path + " is not valid JSON: " + e.what());
    }
    apply_config_json(cfg, j);
  }

  auto given = [&](const char* name) {
    const CLI::Option* o = sub->get_option_no_throw(name);
    return o != nullptr && o->count() > 0;
  };
  if (given("--suite")) cfg.suite = suite;
  if (given("--eq")) cfg.equation = eq;
  if (given("--scenario")) cfg.scenario = scenario;
  if (given("--grid")) cfg.grid = parse_grid(grid);
  if (given("--dt")) cfg.dt = dt;
  if (given("--t-end")) cfg.t_end = t_end;
  if (given("--record-every")) cfg.record_every = record_every;
  if (given("--tol")) cfg.tolerance = tol;
  if (given("--seed")) cfg.seed = seed;
  if (given("--amplitude")) cfg.amplitude = amplitude;
  if (given("--params"))
    for (const auto& [k, v] : parse_params(params)) cfg.params[k] = v;
  if (given("--files")) cfg.files = split(files, ',');
  if (given("--out")) cfg.out_dir = out;

  if (cfg.tolerance && !(*cfg.tolerance > 0.0)) throw UsageError("--tol must be positive");
  if (cfg.dt && !(*cfg.dt > 0.0)) throw UsageError("--dt must be positive");
  if (cfg.t_end && !(*cfg.t_end >= 0.0)) throw UsageError("--t-end must not be negative");
  if (cfg.record_every && *cfg.record_every < 1) throw UsageError("--record-every must be at least 1");
  return cfg;
}

nlohmann::json to_json(const RunConfig& cfg) {
  nlohmann::json j;
  j["command"] = to_string(cfg.command);
  switch (cfg.command) {
    case Command::verify:
      j["suite"] = cfg.suite;
      j["seed"] = cfg.seed;
      break;
    case Command::simulate:
      j["equation"] = cfg.equation;
      j["scenario"] = cfg.scenario;
      j["seed"] = cfg.seed;
      j["amplitude"] = cfg.amplitude;
      if (!cfg.grid.empty()) j["grid"] = cfg.grid;
      if (cfg.dt) j["dt"] = *cfg.dt;
      if (cfg.t_end) j["t_end"] = *cfg.t_end;
      if (cfg.record_every) j["record_every"] = *cfg.record_every;
      break;
    case Command::residual:
      j["equation"] = cfg.equation;
      j["files"] = cfg.files;
      break;
  }
  if (!cfg.params.empty()) j["params"] = cfg.params;
  if (cfg.tolerance) j["tolerance"] = *cfg.tolerance;
  return j;
}

}  // namespace sdyred::cli
