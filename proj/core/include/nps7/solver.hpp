#pragma once

#include "nps7/assembly.hpp"
#include "nps7/linsolve.hpp"

#include <string_view>

namespace nps7 {

/// Scalar type used for assembly and the LU solve.
enum class Precision { Double, Extended };

std::string_view to_string(Precision precision);
Precision parse_precision(std::string_view text);

/// build + lu_solve in the requested precision.
SolutionGrid solve_spline(const IvpProblem& problem, const SplineParams& params,
                          EndConditionMode mode, int n, Precision precision = Precision::Double,
                          const BuildOptions& options = {});

}  // namespace nps7
