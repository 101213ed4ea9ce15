#pragma once

#include <iosfwd>
#include <json.hpp>

#include "cli/config.hpp"
#include "cli/suites.hpp"

namespace sdyred::cli {

// Each command prints its JSON document to `out` and returns an exit code.
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_simulate(const RunConfig& cfg, std::ostream& out);
int cmd_residual(const RunConfig& cfg, std::ostream& out);

// The verify report. Everything outside "timestamp" depends only on the config.
nlohmann::json verify_report(const RunConfig& cfg, const std::vector<CheckResult>& checks);

// Parses argv, dispatches, and maps exceptions to exit codes
// (usage and precondition errors 2, I/O and numerical failures 3).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sdyred::cli
