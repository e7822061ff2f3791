#pragma once

#include "nps7/ivp.hpp"
#include "nps7/linsolve.hpp"
#include "nps7/solver.hpp"

#include <optional>
#include <span>
#include <vector>

namespace nps7 {

/// Fixed-step RK4 solution of the companion first-order system
/// (y, y', ..., y^(N-1)), sampled at every step point.
class RkTrajectory {
 public:
  RkTrajectory(double a, double h, int order, std::vector<double> states);

  int steps() const { return static_cast<int>(states_.size() / order_) - 1; }
  int order() const { return order_; }
  double a() const { return a_; }
  double h() const { return h_; }
  double time(int step) const { return a_ + step * h_; }

  /// y at step point `step` (derivative 0 of the state).
  double value(int step) const { return states_[static_cast<std::size_t>(step) * order_]; }
  std::span<const double> state(int step) const;

  /// y at t, which must coincide with a step point to within 1e-9 h;
  /// throws ValidationError otherwise.
  double value_at(double t) const;

 private:
  double a_;
  double h_;
  int order_;
  std::vector<double> states_;
};

RkTrajectory rk_solve(const HighOrderIvp& problem, int steps);
inline RkTrajectory rk_solve(const IvpProblem& problem, int steps) {
  return rk_solve(problem.general(), steps);
}

/// max_i |y_i - y_ref(t_i)| over all knots, i = 0..n.
double max_abs_error(const SolutionGrid& grid, const ForceExpr& exact);
double max_abs_error(const SolutionGrid& grid, const RkTrajectory& reference);

struct ConvergenceEntry {
  int n = 0;
  double max_abs_error = 0.0;
};

struct ConvergenceReport {
  EndConditionMode mode = EndConditionMode::Standard;
  SplineParams params;
  std::vector<ConvergenceEntry> entries;
  /// orders[k] = log2(E_k / E_{k+1}) when n_{k+1} = 2 n_k, empty otherwise.
  std::vector<std::optional<double>> orders;

  /// The order across the last exact doubling, if any.
  std::optional<double> last_order() const;
};

/// Observed orders for an (n, error) sequence; n must be strictly increasing.
std::vector<std::optional<double>> observed_orders(std::span<const ConvergenceEntry> entries);

/// Smallest RK step count that puts every knot of every n on a step point and
/// is at least 100 * max(n_list).
int reference_steps(std::span<const int> n_list);

/// Solves for each n and measures the error against `exact` when given, or
/// otherwise against rk_solve with reference_steps(n_list) steps. The
/// solves run concurrently.
ConvergenceReport convergence_study(const IvpProblem& problem, const SplineParams& params,
                                    EndConditionMode mode, std::span<const int> n_list,
                                    const std::optional<ForceExpr>& exact = std::nullopt,
                                    Precision precision = Precision::Double);

}  // namespace nps7
