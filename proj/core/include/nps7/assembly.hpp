#pragma once

#include "nps7/end_conditions.hpp"
#include "nps7/ivp.hpp"
#include "nps7/spline_params.hpp"

#include <Eigen/Dense>

#include <vector>

namespace nps7 {

struct BuildOptions {
  /// Divide each row by its largest absolute entry. Off by default; rows are
  /// otherwise used as written, with coefficients carrying 1/h^7.
  bool normalize_rows = false;
};

/// n x n system for the knot values y_1..y_n. Row r (zero-based) is the
/// equation attached to knot r+1: rows 0..5 are end conditions, the rest are
/// the interior consistency relation.
template <typename Real>
struct BasicLinearSystem {
  using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

  Matrix matrix;
  Vector rhs;
  double a = 0.0;
  double h = 0.0;
  int n = 0;
  double y0 = 0.0;  // known initial value, prepended to the solution
  EndConditionMode mode = EndConditionMode::Standard;
  SplineParams params;

  double knot(int i) const { return a + i * h; }
};

using LinearSystem = BasicLinearSystem<double>;
using ExtendedLinearSystem = BasicLinearSystem<long double>;

/// Assembles the system with U_j replaced by g_j - f_j y_j. Throws
/// ValidationError when n < min_intervals(mode) or params violate the sum
/// constraint.
template <typename Real>
BasicLinearSystem<Real> build_system(const IvpProblem& problem, const SplineParams& params,
                                     EndConditionMode mode, int n,
                                     const BuildOptions& options = {});

inline LinearSystem build(const IvpProblem& problem, const SplineParams& params,
                          EndConditionMode mode, int n, const BuildOptions& options = {}) {
  return build_system<double>(problem, params, mode, n, options);
}

/// LHS - RHS of one row when exact values of a known solution are inserted.
/// `scale` is the sum of the magnitudes of the individual terms, so
/// |value| / scale is the relative residual.
struct RowResidual {
  long double value = 0;
  long double scale = 0;

  long double relative() const { return scale == 0 ? 0 : value / scale; }
};

/// Inserts y_i = exact(t_i), U_i = exact^(7)(t_i) and the initial
/// derivatives of `exact` into row `row` (1..n, knot-indexed) of the scheme
/// on [a, b] with n intervals. Corresponds to the f = 0 problem whose
/// solution is `exact`. Evaluated in long double.
RowResidual row_residual(EndConditionMode mode, const SplineParams& params,
                         const ForceExpr& exact, double a, double b, int n, int row);

/// Same, against an explicit row list (e.g. the published rows).
RowResidual end_row_residual(const EndRow& row, const ForceExpr& exact, double a, double h);

extern template BasicLinearSystem<double> build_system<double>(const IvpProblem&,
                                                               const SplineParams&,
                                                               EndConditionMode, int,
                                                               const BuildOptions&);
extern template BasicLinearSystem<long double> build_system<long double>(
    const IvpProblem&, const SplineParams&, EndConditionMode, int, const BuildOptions&);

}  // namespace nps7
