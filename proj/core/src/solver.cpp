#include "nps7/solver.hpp"

#include "nps7/error.hpp"

#include <string>

namespace nps7 {

std::string_view to_string(Precision precision) {
  return precision == Precision::Double ? "double" : "extended";
}

Precision parse_precision(std::string_view text) {
  if (text == "double") return Precision::Double;
  if (text == "extended") return Precision::Extended;
  throw ValidationError("unknown precision '" + std::string(text) +
                        "' (expected double or extended)");
}

SolutionGrid solve_spline(const IvpProblem& problem, const SplineParams& params,
                          EndConditionMode mode, int n, Precision precision,
                          const BuildOptions& options) {
  if (precision == Precision::Extended) {
    return lu_solve(build_system<long double>(problem, params, mode, n, options));
  }
  return lu_solve(build_system<double>(problem, params, mode, n, options));
}

}  // namespace nps7
