#pragma once

#include "nps7/end_conditions.hpp"
#include "nps7/ivp.hpp"
#include "nps7/spline_params.hpp"

#include <string>
#include <vector>

namespace nps7::fixtures {

/// A test problem with a closed-form solution.
struct ReferenceProblem {
  std::string name;
  IvpProblem problem;
  ForceExpr exact;
};

/// y7 + y = -(t^2-43) cos t + (t^2-14t-1) sin t on [-1, 1]; y = (t^2-1) sin t.
ReferenceProblem example1();
/// y7 - y = -7 e^t (5+2t) on [0, 1]; y = t(1-t) e^t.
ReferenceProblem example2();
/// y7 = 7(-6e^t + e^t(1-t)) + (-7e^t + e^t(1-t)) t on [0, 1]; y = t(1-t) e^t.
ReferenceProblem example3();

std::vector<ReferenceProblem> all_examples();

/// The three parameter columns of the standard-mode tables.
std::vector<SplineParams> table_param_sets();

/// Delta used for the improved-mode runs (the tables do not state one).
inline constexpr long long kImprovedDelta = 0;

/// One published maximum absolute error.
struct TableCell {
  int table;     // 1..6
  int example;   // 1..3
  EndConditionMode mode;
  int column;    // index into table_param_sets() for standard mode, 0 otherwise
  int n;
  double reported;
  /// Improved n = 10 rows lie before the asymptotic regime and are not
  /// used for acceptance.
  bool pre_asymptotic;
};

std::vector<TableCell> published_tables();

}  // namespace nps7::fixtures
