#pragma once

#include "nps7/assembly.hpp"

#include <vector>

namespace nps7 {

/// Knot values y_0..y_n of a spline solution.
struct SolutionGrid {
  std::vector<double> t;
  std::vector<double> y;
  double h = 0.0;
  EndConditionMode mode = EndConditionMode::Standard;
  SplineParams params;
  /// ||A y - b||_inf / (||A||_inf ||y||_inf) of the accepted solve.
  double relative_residual = 0.0;

  std::size_t size() const { return y.size(); }
};

inline constexpr double kSingularPivotRatio = 1e-14;
inline constexpr double kResidualBound = 1e-8;

/// LU with partial pivoting. Throws NumericalError when a pivot falls below
/// 1e-14 times the scale of its row, or when the backward residual bound
/// ||A y - b|| <= 1e-8 ||A|| ||y|| fails.
template <typename Real>
SolutionGrid lu_solve(const BasicLinearSystem<Real>& system);

/// Raw dense solve used by lu_solve; exposed for tests on small matrices.
template <typename Real>
Eigen::Matrix<Real, Eigen::Dynamic, 1> lu_solve_dense(
    const Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>& matrix,
    const Eigen::Matrix<Real, Eigen::Dynamic, 1>& rhs, double* relative_residual = nullptr);

/// Estimate of ||A||_inf ||A^-1||_inf from the LU factors of A^T.
template <typename Real>
double condition_estimate(const BasicLinearSystem<Real>& system);

double condition_estimate_dense(const Eigen::MatrixXd& matrix);

extern template SolutionGrid lu_solve<double>(const LinearSystem&);
extern template SolutionGrid lu_solve<long double>(const ExtendedLinearSystem&);
extern template double condition_estimate<double>(const LinearSystem&);
extern template double condition_estimate<long double>(const ExtendedLinearSystem&);

}  // namespace nps7
