#include "doctest.h"

#include "nps7/error.hpp"
#include "nps7_cli/config.hpp"
#include "nps7_cli/run.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace nps7;
using namespace nps7::cli;

namespace {

const std::filesystem::path kConfigDir = NPS7_CONFIG_DIR;

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("nps7_test_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

const char* kExample2 = R"(
[problem]
a = 0
b = 1
f = -1
g = -35*exp(t) - 14*t*exp(t)
u0 = 0
u1 = 1
u2 = 0
u3 = -3
u4 = -8
u5 = -15
u6 = -24
exact = t*exp(t) - t^2*exp(t)

[method]
mode = standard
alpha = 1/2
beta = 19/2
gamma_ = 49/2
delta = 51/2
n = 20

[output]
csv_path = out.csv
)";

int run_args(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = main_entry(args, out, err);
  if (out_text != nullptr) *out_text = out.str() + err.str();
  return code;
}

}  // namespace

TEST_CASE("parse a solve config") {
  const RunConfig cfg = parse_config(kExample2, Subcommand::Solve, "/tmp/base");
  REQUIRE(cfg.problem.has_value());
  CHECK(cfg.problem->problem.u[4] == -8.0);
  CHECK(cfg.problem->exact.has_value());
  CHECK(cfg.method.n_list == std::vector<int>{20});
  CHECK(cfg.method.mode == EndConditionMode::Standard);
  CHECK(resolve(cfg.method.params).alpha == ExactRational(1) / 2);
  CHECK(cfg.csv_path == std::filesystem::path("/tmp/base/out.csv"));
  CHECK(cfg.method.precision == Precision::Double);
}

TEST_CASE("config errors") {
  std::string text = kExample2;
  SUBCASE("unknown key") {
    text += "\n[method]\nfoo = 1\n";
    CHECK_THROWS_AS(parse_config(text, Subcommand::Solve), Error);
  }
  SUBCASE("bad sum") {
    const auto pos = text.find("delta = 51/2");
    text.replace(pos, 12, "delta = 50/2");
    CHECK_THROWS_AS(parse_config(text, Subcommand::Solve), ValidationError);
  }
  SUBCASE("two parameter choices") {
    const auto pos = text.find("n = 20");
    text.insert(pos, "delta_opt = 3\n");
    CHECK_THROWS_AS(parse_config(text, Subcommand::Solve), ValidationError);
  }
  SUBCASE("n below the mode minimum") {
    const auto pos = text.find("n = 20");
    text.replace(pos, 6, "n = 8");
    CHECK_THROWS_AS(parse_config(text, Subcommand::Solve), ValidationError);
  }
  SUBCASE("malformed expression") {
    const auto pos = text.find("f = -1");
    text.replace(pos, 6, "f = 1 +");
    CHECK_THROWS_WITH_AS(parse_config(text, Subcommand::Solve),
                         doctest::Contains("[problem] f: expected a factor (at position 3)"),
                         ValidationError);
  }
  SUBCASE("missing section") {
    CHECK_THROWS_AS(parse_config("[method]\nmode = standard\n", Subcommand::Solve), ValidationError);
  }
}

TEST_CASE("solve writes a deterministic csv") {
  const auto dir = scratch_dir("determinism");
  std::string text = kExample2;
  text.replace(text.find("out.csv"), 7, (dir / "a.csv").string());
  std::ostringstream sink;
  run(parse_config(text, Subcommand::Solve), sink);
  text.replace(text.find((dir / "a.csv").string()), (dir / "a.csv").string().size(),
               (dir / "b.csv").string());
  run(parse_config(text, Subcommand::Solve), sink);

  const std::string a = read_file(dir / "a.csv");
  CHECK(a == read_file(dir / "b.csv"));
  CHECK(a.rfind("t,y_numeric,y_exact,abs_error\n", 0) == 0);
  CHECK(std::count(a.begin(), a.end(), '\n') == 22);
}

TEST_CASE("csv formatting") {
  SolutionGrid grid;
  grid.t = {0.0, 0.5};
  grid.y = {0.0, 0.1};
  const std::string plain = solution_csv(grid, nullptr);
  CHECK(plain == "t,y_numeric,y_exact,abs_error\n0,0,,\n0.5,0.10000000000000001,,\n");
  const std::vector<double> ref = {0.0, 0.125};
  const std::string with_ref = solution_csv(grid, &ref);
  CHECK(with_ref.find("0.5,0.10000000000000001,0.125,0.024999999999999994") != std::string::npos);
}

TEST_CASE("command-line exit codes") {
  std::string out;
  CHECK(run_args({"coeffs", "--delta", "30"}, &out) == kExitOk);
  CHECK(out.find("c12 = 0") != std::string::npos);
  CHECK(out.find("alpha = 61/15") != std::string::npos);

  CHECK(run_args({"coeffs", "--params", "0,0,0,60"}, &out) == kExitOk);
  CHECK(out.find("c9 = -20") != std::string::npos);

  CHECK(run_args({"coeffs", "--params", "1,1,1,1"}, &out) == kExitOk);
  CHECK(out.find("violates") != std::string::npos);

  CHECK(run_args({"coeffs", "--params", "1,1,1"}, &out) == kExitConfig);
  CHECK(run_args({"coeffs", "--delta", "1", "--theta", "2"}, &out) == kExitConfig);
  CHECK(run_args({"coeffs"}, &out) == kExitConfig);
  CHECK(run_args({"frobnicate"}, &out) == kExitConfig);
  CHECK(run_args({"solve", "--config", "/nonexistent/file.ini"}, &out) == kExitConfig);
  CHECK(run_args({"--help"}, &out) == kExitOk);
}

TEST_CASE("bundled configs run") {
  const auto dir = scratch_dir("bundled");
  const auto cwd = std::filesystem::current_path();
  std::filesystem::current_path(dir);
  for (const auto& entry : std::filesystem::directory_iterator(kConfigDir)) {
    const std::string name = entry.path().stem().string();
    const std::string sub = name.rfind("table", 0) == 0 ? "converge"
                            : name.rfind("cascade", 0) == 0 ? "cascade"
                                                            : "solve";
    std::string out;
    INFO(name << ": " << out);
    CHECK(run_args({sub, "--config", entry.path().string()}, &out) == kExitOk);
    CHECK(out.find("wrote") != std::string::npos);
  }
  std::filesystem::current_path(cwd);
}

TEST_CASE("bad parameter sum in a config exits with code 1") {
  std::string out;
  CHECK(run_args({"solve", "--config", std::string(NPS7_DATA_DIR) + "/bad_sum.ini"}, &out) ==
        kExitConfig);
  CHECK(out.find("got sum 59") != std::string::npos);
}
