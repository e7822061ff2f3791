#include "nps7/linsolve.hpp"

#include "nps7/error.hpp"

#include <cmath>
#include <string>

namespace nps7 {

namespace {

template <typename Real>
using MatrixX = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using VectorX = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

template <typename Real>
Eigen::PartialPivLU<MatrixX<Real>> factorize(const MatrixX<Real>& matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw ValidationError("lu_solve needs a non-empty square matrix");
  }
  if (!matrix.allFinite()) throw ValidationError("matrix has non-finite entries");
  Eigen::PartialPivLU<MatrixX<Real>> lu(matrix);
  const MatrixX<Real> permuted = lu.permutationP() * matrix;
  const auto& factors = lu.matrixLU();
  for (Eigen::Index k = 0; k < matrix.rows(); ++k) {
    const Real row_scale = permuted.row(k).cwiseAbs().maxCoeff();
    if (!(std::abs(factors(k, k)) > static_cast<Real>(kSingularPivotRatio) * row_scale)) {
      throw NumericalError("matrix is numerically singular (pivot " + std::to_string(k) +
                           " below 1e-14 of its row scale)");
    }
  }
  return lu;
}

template <typename Real>
double inf_norm(const MatrixX<Real>& matrix) {
  return static_cast<double>(matrix.cwiseAbs().rowwise().sum().maxCoeff());
}

}  // namespace

template <typename Real>
VectorX<Real> lu_solve_dense(const MatrixX<Real>& matrix, const VectorX<Real>& rhs,
                             double* relative_residual) {
  if (rhs.size() != matrix.rows()) throw ValidationError("rhs size does not match matrix");
  if (!rhs.allFinite()) throw ValidationError("rhs has non-finite entries");
  const auto lu = factorize(matrix);
  VectorX<Real> y = lu.solve(rhs);
  const double residual = static_cast<double>((matrix * y - rhs).cwiseAbs().maxCoeff());
  const double bound_scale = inf_norm(matrix) * static_cast<double>(y.cwiseAbs().maxCoeff());
  const double relative = bound_scale > 0 ? residual / bound_scale : residual;
  if (!std::isfinite(relative) || relative > kResidualBound) {
    throw NumericalError("backward residual " + std::to_string(relative) +
                         " exceeds 1e-8 relative bound");
  }
  if (relative_residual != nullptr) *relative_residual = relative;
  return y;
}

template <typename Real>
SolutionGrid lu_solve(const BasicLinearSystem<Real>& system) {
  double relative = 0.0;
  const VectorX<Real> y = lu_solve_dense<Real>(system.matrix, system.rhs, &relative);
  SolutionGrid grid;
  grid.h = system.h;
  grid.mode = system.mode;
  grid.params = system.params;
  grid.relative_residual = relative;
  grid.t.resize(static_cast<std::size_t>(system.n) + 1);
  grid.y.resize(static_cast<std::size_t>(system.n) + 1);
  grid.y[0] = system.y0;
  for (int i = 0; i <= system.n; ++i) grid.t[static_cast<std::size_t>(i)] = system.knot(i);
  for (int i = 1; i <= system.n; ++i) {
    grid.y[static_cast<std::size_t>(i)] = static_cast<double>(y(i - 1));
  }
  return grid;
}

template <typename Real>
double condition_estimate(const BasicLinearSystem<Real>& system) {
  // The 1-norm estimate of A^T is the infinity-norm estimate of A.
  const MatrixX<Real> transposed = system.matrix.transpose();
  const auto lu = factorize<Real>(transposed);
  const double rcond = static_cast<double>(lu.rcond());
  if (!(rcond > 0)) throw NumericalError("condition estimate: singular matrix");
  return 1.0 / rcond;
}

double condition_estimate_dense(const Eigen::MatrixXd& matrix) {
  LinearSystem system;
  system.matrix = matrix;
  return condition_estimate(system);
}

template VectorX<double> lu_solve_dense<double>(const MatrixX<double>&, const VectorX<double>&,
                                                double*);
template VectorX<long double> lu_solve_dense<long double>(const MatrixX<long double>&,
                                                          const VectorX<long double>&, double*);
template SolutionGrid lu_solve<double>(const LinearSystem&);
template SolutionGrid lu_solve<long double>(const ExtendedLinearSystem&);
template double condition_estimate<double>(const LinearSystem&);
template double condition_estimate<long double>(const ExtendedLinearSystem&);

}  // namespace nps7
