#pragma once

#include "nps7/cascade.hpp"
#include "nps7/end_conditions.hpp"
#include "nps7/ivp.hpp"
#include "nps7/solver.hpp"
#include "nps7/spline_params.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nps7::cli {

enum class Subcommand { Solve, Cascade, Converge };

std::string_view to_string(Subcommand subcommand);

/// How the spline parameters are specified: explicit values, a member of the
/// optimal family, or the trigonometric closed forms.
struct ExplicitParams {
  SplineParams params;
};
struct OptimalDelta {
  ExactRational delta;
};
struct ThetaChoice {
  double theta;
};
using ParamChoice = std::variant<ExplicitParams, OptimalDelta, ThetaChoice>;

SplineParams resolve(const ParamChoice& choice);

struct ProblemSpec {
  IvpProblem problem;
  std::optional<ForceExpr> exact;
};

struct CascadeSpec {
  CascadeModel model;
  /// Fill y_exact with the direct simulation of the coupled system.
  bool direct_reference = false;
  int direct_steps = 10000;
};

struct MethodSpec {
  EndConditionMode mode = EndConditionMode::Standard;
  ParamChoice params = ExplicitParams{};
  std::vector<int> n_list;
  Precision precision = Precision::Double;
  bool normalize_rows = false;
};

struct RunConfig {
  Subcommand subcommand = Subcommand::Solve;
  std::optional<ProblemSpec> problem;
  std::optional<CascadeSpec> cascade;
  MethodSpec method;
  std::filesystem::path csv_path;
  std::filesystem::path g_path;
};

/// Parses INI text with sections [problem] or [cascade], [method], [output].
/// Relative output paths are resolved against `base_dir`. Throws
/// ValidationError / ParseError on any problem, including unknown keys.
RunConfig parse_config(std::string_view text, Subcommand subcommand,
                       const std::filesystem::path& base_dir = {});

RunConfig load_config(const std::filesystem::path& path, Subcommand subcommand);

}  // namespace nps7::cli
