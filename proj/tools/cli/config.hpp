#pragma once

#include <cstdint>
#include <json.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdyred::cli {

enum class Command { verify, simulate, residual };
const char* to_string(Command c);

// Bad flags, unknown names, malformed config files. Maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_abort = 3 };

struct RunConfig {
  Command command = Command::verify;
  std::string suite = "all";
  std::string equation;
  std::string scenario;
  std::vector<int> grid;
  std::optional<double> dt, t_end, tolerance;
  std::optional<int> record_every;
  std::uint64_t seed = 1;
  double amplitude = 0.1;
  std::map<std::string, double> params;
  std::vector<std::string> files;
  std::string out_dir;  // empty: no files written (verify, residual)
};

// Name of the environment variable holding the default output directory.
inline constexpr const char* kOutEnv = "SDYRED_OUT";

// Parses argv. Values come from, in increasing precedence: built-in defaults,
// the environment (output directory only), the --config JSON file, and flags.
// Throws UsageError. Returns nullopt after printing help.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv);

// Applies the keys of a config object onto cfg. Throws UsageError on unknown
// keys or wrong types.
void apply_config_json(RunConfig& cfg, const nlohmann::json& j);

// "64" or "128,32".
std::vector<int> parse_grid(const std::string& s);
// "a=1.5,r2=-1".
std::map<std::string, double> parse_params(const std::string& s);

nlohmann::json to_json(const RunConfig& cfg);

}  // namespace sdyred::cli
