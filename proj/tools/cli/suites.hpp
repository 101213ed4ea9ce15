#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "sdyred/random_fields.hpp"
#include "sdyred/report.hpp"

namespace sdyred::cli {

struct CheckResult {
  std::string name;  // "<suite>/<check>"
  ResidualReport report;
  nlohmann::json info;  // deterministic description of the inputs
  double wall_seconds = 0.0;
};

std::vector<std::string> suite_names();  // without "all"
bool is_suite(const std::string& name);  // includes "all"

// Checks of one suite (or every suite for "all"), sorted by name. A tolerance
// override replaces each check's own tolerance.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed,
                                   std::optional<double> tolerance = std::nullopt);

// Generator for one check: the seed and check name fix the stream.
Rng check_rng(std::uint64_t seed, const std::string& check);

}  // namespace sdyred::cli
