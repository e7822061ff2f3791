#include "nps7/oracle.hpp"

#include "nps7/error.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <string>

namespace nps7 {

RkTrajectory::RkTrajectory(double a, double h, int order, std::vector<double> states)
    : a_(a), h_(h), order_(order), states_(std::move(states)) {}

std::span<const double> RkTrajectory::state(int step) const {
  return std::span<const double>(states_).subspan(static_cast<std::size_t>(step) * order_,
                                                  static_cast<std::size_t>(order_));
}

double RkTrajectory::value_at(double t) const {
  const double position = (t - a_) / h_;
  const double nearest = std::round(position);
  if (std::abs(position - nearest) > 1e-9 || nearest < 0 || nearest > steps()) {
    throw ValidationError("t = " + std::to_string(t) + " is not a step point of the reference");
  }
  return value(static_cast<int>(nearest));
}

RkTrajectory rk_solve(const HighOrderIvp& problem, int steps) {
  problem.validate();
  if (steps < 1) throw ValidationError("steps must be positive");
  const int order = problem.order;
  const auto size = static_cast<std::size_t>(order);
  const double h = (problem.b - problem.a) / steps;

  // state = (y, y', ..., y^(N-1)); y^(N) = g - f y.
  auto rhs = [&](double t, std::span<const double> y, std::span<double> dy) {
    for (std::size_t k = 0; k + 1 < size; ++k) dy[k] = y[k + 1];
    dy[size - 1] = problem.g(t) - problem.f(t) * y[0];
  };

  std::vector<double> states(size * (static_cast<std::size_t>(steps) + 1));
  std::copy(problem.u.begin(), problem.u.end(), states.begin());
  std::vector<double> k1(size), k2(size), k3(size), k4(size), tmp(size);
  for (int s = 0; s < steps; ++s) {
    const double t = problem.a + s * h;
    const std::span<const double> y(states.data() + static_cast<std::size_t>(s) * size, size);
    rhs(t, y, k1);
    for (std::size_t k = 0; k < size; ++k) tmp[k] = y[k] + 0.5 * h * k1[k];
    rhs(t + 0.5 * h, tmp, k2);
    for (std::size_t k = 0; k < size; ++k) tmp[k] = y[k] + 0.5 * h * k2[k];
    rhs(t + 0.5 * h, tmp, k3);
    for (std::size_t k = 0; k < size; ++k) tmp[k] = y[k] + h * k3[k];
    rhs(t + h, tmp, k4);
    double* next = states.data() + static_cast<std::size_t>(s + 1) * size;
    for (std::size_t k = 0; k < size; ++k) {
      next[k] = y[k] + h / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
    }
  }
  return RkTrajectory(problem.a, h, order, std::move(states));
}

double max_abs_error(const SolutionGrid& grid, const ForceExpr& exact) {
  double out = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out = std::max(out, std::abs(grid.y[i] - exact(grid.t[i])));
  }
  return out;
}

double max_abs_error(const SolutionGrid& grid, const RkTrajectory& reference) {
  double out = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out = std::max(out, std::abs(grid.y[i] - reference.value_at(grid.t[i])));
  }
  return out;
}

std::optional<double> ConvergenceReport::last_order() const {
  for (auto it = orders.rbegin(); it != orders.rend(); ++it) {
    if (it->has_value()) return *it;
  }
  return std::nullopt;
}

std::vector<std::optional<double>> observed_orders(std::span<const ConvergenceEntry> entries) {
  std::vector<std::optional<double>> out;
  for (std::size_t k = 0; k + 1 < entries.size(); ++k) {
    const auto& coarse = entries[k];
    const auto& fine = entries[k + 1];
    if (fine.n == 2 * coarse.n && coarse.max_abs_error > 0 && fine.max_abs_error > 0) {
      out.emplace_back(std::log2(coarse.max_abs_error / fine.max_abs_error));
    } else {
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

int reference_steps(std::span<const int> n_list) {
  if (n_list.empty()) throw ValidationError("n_list is empty");
  long long lcm = 1;
  int largest = 0;
  for (int n : n_list) {
    if (n < 1) throw ValidationError("n must be positive");
    lcm = std::lcm(lcm, static_cast<long long>(n));
    largest = std::max(largest, n);
    if (lcm > 10'000'000) throw ValidationError("n_list has no common refinement below 1e7 steps");
  }
  const long long target = 100LL * largest;
  const long long steps = (target + lcm - 1) / lcm * lcm;
  if (steps > 10'000'000) throw ValidationError("reference grid would exceed 1e7 steps");
  return static_cast<int>(steps);
}

ConvergenceReport convergence_study(const IvpProblem& problem, const SplineParams& params,
                                    EndConditionMode mode, std::span<const int> n_list,
                                    const std::optional<ForceExpr>& exact, Precision precision) {
  if (n_list.empty()) throw ValidationError("n_list is empty");
  for (std::size_t k = 1; k < n_list.size(); ++k) {
    if (n_list[k] <= n_list[k - 1]) throw ValidationError("n_list must be strictly increasing");
  }
  for (int n : n_list) {
    if (n < min_intervals(mode)) {
      throw ValidationError(std::string(to_string(mode)) + " end conditions need n >= " +
                            std::to_string(min_intervals(mode)) + ", got n = " + std::to_string(n));
    }
  }
  validate(params);

  std::optional<RkTrajectory> reference;
  if (!exact) reference = rk_solve(problem, reference_steps(n_list));

  std::vector<std::future<double>> jobs;
  jobs.reserve(n_list.size());
  for (int n : n_list) {
    jobs.push_back(std::async(std::launch::async, [&, n] {
      const SolutionGrid grid = solve_spline(problem, params, mode, n, precision);
      return exact ? max_abs_error(grid, *exact) : max_abs_error(grid, *reference);
    }));
  }

  ConvergenceReport report;
  report.mode = mode;
  report.params = params;
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    report.entries.push_back({n_list[k], jobs[k].get()});
  }
  report.orders = observed_orders(report.entries);
  return report;
}

}  // namespace nps7
