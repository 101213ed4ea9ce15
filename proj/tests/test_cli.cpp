#include <doctest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "sdyred/snapshot.hpp"

using namespace sdyred;
using namespace sdyred::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sdyred");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("sdyred_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::vector<std::string> files_matching(const fs::path& dir, const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string n = e.path().filename().string();
    if (n.rfind(prefix, 0) == 0 && e.path().extension() == ".snap") out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

}  // namespace

TEST_CASE("argument handling") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"verify", "--suite", "bogus"}).code == exit_usage);
  CHECK(run({"verify", "--frobnicate"}).code == exit_usage);
  CHECK(run({"simulate", "--eq", "nls"}).code == exit_usage);
  CHECK(run({"simulate", "--eq", "ds", "--scenario", "zero", "--out", scratch("ds").string()}).code == exit_usage);
  CHECK(run({"residual", "--eq", "zakharov", "--files", "/nonexistent/phi.snap"}).code == exit_abort);
  CHECK(run({"--help"}).code == exit_pass);

  CHECK(parse_grid("128,32") == std::vector<int>{128, 32});
  CHECK_THROWS_AS(parse_grid("12x"), UsageError);
  const auto p = parse_params("a=1.5,r2=-1");
  CHECK(p.at("a") == 1.5);
  CHECK(p.at("r2") == -1.0);
  CHECK_THROWS_AS(parse_params("a"), UsageError);
}

TEST_CASE("configuration precedence") {
  const fs::path dir = scratch("config");
  const fs::path file = dir / "run.json";
  std::ofstream(file) << R"({"seed": 5, "amplitude": 0.3, "out": "from_file"})";

  ::setenv(kOutEnv, "from_env", 1);
  const char* argv1[] = {"sdyred", "simulate", "--eq", "nls", "--scenario", "zero"};
  auto c1 = parse_command_line(6, argv1);
  REQUIRE(c1);
  CHECK(c1->out_dir == "from_env");
  CHECK(c1->seed == 1);

  const std::string f = file.string();
  const char* argv2[] = {"sdyred", "simulate", "--config", f.c_str(), "--eq", "nls", "--scenario", "zero"};
  auto c2 = parse_command_line(8, argv2);
  REQUIRE(c2);
  CHECK(c2->out_dir == "from_file");
  CHECK(c2->seed == 5);
  CHECK(c2->amplitude == 0.3);

  const char* argv3[] = {"sdyred", "simulate", "--config", f.c_str(), "--eq", "nls", "--scenario", "zero",
                         "--seed", "9", "--out", "from_flag"};
  auto c3 = parse_command_line(12, argv3);
  REQUIRE(c3);
  CHECK(c3->out_dir == "from_flag");
  CHECK(c3->seed == 9);
  CHECK(c3->amplitude == 0.3);
  ::unsetenv(kOutEnv);

  RunConfig bad;
  CHECK_THROWS_AS(apply_config_json(bad, nlohmann::json{{"colour", 1}}), UsageError);
  CHECK_THROWS_AS(apply_config_json(bad, nlohmann::json{{"seed", "x"}}), UsageError);
  CHECK_FALSE(to_json(*c3).contains("out"));
}

TEST_CASE("verify") {
  SUBCASE("each suite passes and is deterministic") {
    for (const char* suite : {"lax", "gauge", "nonisospectral"}) {
      CAPTURE(suite);
      const Run a = run({"verify", "--suite", suite, "--seed", "42"});
      const Run b = run({"verify", "--suite", suite, "--seed", "42"});
      CHECK(a.code == exit_pass);
      auto ja = a.json(), jb = b.json();
      CHECK(ja["passed"] == true);
      CHECK(ja["summary"]["failed"] == 0);
      CHECK(ja["checks"].size() == ja["summary"]["checks"]);
      ja.erase("timestamp");
      jb.erase("timestamp");
      CHECK(ja.dump() == jb.dump());
    }
  }
  SUBCASE("an impossible tolerance fails with exit 1") {
    const Run r = run({"verify", "--suite", "gauge", "--tol", "1e-300"});
    CHECK(r.code == exit_fail);
    CHECK(r.json()["passed"] == false);
  }
  SUBCASE("seeds change the draws") {
    auto a = run({"verify", "--suite", "gauge", "--seed", "1"}).json();
    auto b = run({"verify", "--suite", "gauge", "--seed", "2"}).json();
    CHECK(a["checks"][0]["worst"] != b["checks"][0]["worst"]);
  }
}

TEST_CASE("simulate") {
  SUBCASE("zero Zakharov data writes all-zero snapshots") {
    const fs::path dir = scratch("zero");
    const Run r = run({"simulate", "--eq", "zakharov", "--scenario", "zero", "--grid", "16,16", "--t-end", "0.05",
                       "--out", dir.string()});
    CHECK(r.code == exit_pass);
    const auto snaps = files_matching(dir, "phi_");
    CHECK(snaps.size() == r.json()["snapshots"].get<std::size_t>());
    CHECK(snaps.size() >= 2);
    for (const auto& s : snaps) CHECK(read_snapshot(s).field.is_zero());
    CHECK(fs::exists(dir / "summary.json"));
    CHECK(fs::exists(dir / "profile.csv"));
    CHECK(fs::exists(dir / "conserved.csv"));
  }
  SUBCASE("NLS soliton summary") {
    const fs::path dir = scratch("nls");
    const Run r = run({"simulate", "--eq", "nls", "--scenario", "sech_soliton", "--out", dir.string()});
    CHECK(r.code == exit_pass);
    const auto j = r.json();
    CHECK(j["final_error"].get<double>() <= 1e-4);
    CHECK(j["closure"]["passed"] == true);
    std::ifstream in(dir / "summary.json");
    CHECK(nlohmann::json::parse(in)["final_error"] == j["final_error"]);
  }
  SUBCASE("KP line soliton") {
    const fs::path dir = scratch("kp");
    const Run r = run({"simulate", "--eq", "kp", "--scenario", "line_soliton", "--t-end", "2", "--out", dir.string()});
    CHECK(r.code == exit_pass);
    CHECK(r.json()["final_error"].get<double>() <= 1e-4);
  }
  SUBCASE("closure failure gives exit 1") {
    const fs::path dir = scratch("coarse");
    const Run r = run({"simulate", "--eq", "nls", "--scenario", "random", "--amplitude", "1.5", "--dt", "0.02",
                       "--t-end", "1", "--record-every", "1", "--tol", "1e-9", "--out", dir.string()});
    CHECK(r.code == exit_fail);
  }
}

TEST_CASE("residual") {
  SUBCASE("solver output as a time series") {
    const fs::path dir = scratch("series");
    REQUIRE(run({"simulate", "--eq", "zakharov", "--scenario", "plane_wave", "--t-end", "0.05", "--record-every", "10",
                 "--out", dir.string()}).code == exit_pass);
    std::vector<std::string> files = files_matching(dir, "phi_");
    const Run r = run({"residual", "--eq", "zakharov", "--files", join(files)});
    CHECK(r.code == exit_pass);
    CHECK(r.json()["mode"] == "time_series");
    CHECK(r.json()["frames"] == files.size());
  }
  SUBCASE("zero fields give exactly zero") {
    const fs::path dir = scratch("zerofiles");
    const Grid g = Grid::plane(16, 16, 1.0, 1.0);
    std::vector<std::string> files;
    for (const char* n : {"phi", "v", "phi_t"}) {
      const std::string path = (dir / (std::string(n) + ".snap")).string();
      write_snapshot(path, Snapshot{n, 0.0, default_axis_labels(2), ScalarField(g)});
      files.push_back(path);
    }
    const Run r = run({"residual", "--eq", "zakharov", "--files", join(files)});
    CHECK(r.code == exit_pass);
    for (const auto& [name, c] : r.json()["report"]["components"].items()) CHECK(c["linf"] == 0.0);
  }
  SUBCASE("mismatched grids abort") {
    const fs::path dir = scratch("mixed");
    const std::string a = (dir / "phi.snap").string(), b = (dir / "v.snap").string();
    write_snapshot(a, Snapshot{"phi", 0.0, default_axis_labels(2), ScalarField(Grid::plane(16, 16, 1.0, 1.0))});
    write_snapshot(b, Snapshot{"v", 0.0, default_axis_labels(2), ScalarField(Grid::plane(8, 8, 1.0, 1.0))});
    const Run r = run({"residual", "--eq", "zakharov", "--files", a + "," + b});
    CHECK(r.code == exit_abort);
    CHECK(r.err.find("grid") != std::string::npos);
  }
  SUBCASE("a single frame without its time derivative is rejected") {
    const fs::path dir = scratch("norate");
    const std::string a = (dir / "phi.snap").string();
    write_snapshot(a, Snapshot{"phi", 0.0, default_axis_labels(2), ScalarField(Grid::plane(16, 16, 1.0, 1.0))});
    CHECK(run({"residual", "--eq", "zakharov", "--files", a}).code == exit_usage);
  }
}

TEST_CASE("installed binary") {
  const char* tool = std::getenv("SDYRED_TOOL");
  if (!tool) {
    MESSAGE("SDYRED_TOOL not set; skipping process-level checks");
    return;
  }
  auto status = [&](const std::string& args) {
    const int s = std::system((std::string(tool) + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status("--help") == 0);
  CHECK(status("verify --suite nonisospectral --seed 3") == 0);
  CHECK(status("verify --suite nope") == 2);
  CHECK(status("") == 2);
}
