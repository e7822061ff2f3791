#pragma once

#include "nps7/forces.hpp"
#include "nps7/ivp.hpp"

#include <vector>

namespace nps7 {

/// dy_k/dt = -gamma * y_{k+1} + L_k(t), k = 1..N, with cyclic closure
/// y_{k+N} = y_k. Scale indices in the API are zero-based (scale k is at
/// position k-1).
struct CascadeModel {
  int scales = 7;
  double gamma = 1.0;
  std::vector<ForceExpr> forces;
  std::vector<double> init_velocities;
  double a = 0.0;
  double b = 1.0;

  /// Throws ValidationError on count mismatch, gamma <= 0 or a >= b.
  void validate() const;

  /// Force at a one-based scale index, any integer, wrapped cyclically.
  const ForceExpr& force(int scale) const;

  /// Relabels scales cyclically: scale k of the result is scale k+shift here.
  CascadeModel shifted(int shift) const;
};

/// g(t) = sum_{j=0}^{N-1} (-gamma)^{N-1-j} d^j/dt^j L_{N-j}(t).
ForceExpr compose_g(const CascadeModel& model);

/// y^(m)(a) of the top-scale velocity for m = 0..N-1, from the initial
/// velocities and the forces at t = a.
std::vector<double> derive_initial_conditions(const CascadeModel& model);

/// The N-th order problem for the top scale: f = gamma^N, g = compose_g.
/// Throws UnsupportedError for even N, whose sign case is not covered.
HighOrderIvp reduce_general(const CascadeModel& model);

/// reduce_general restricted to N = 7, the order the spline solver handles.
/// Throws UnsupportedError for any other N.
IvpProblem reduce(const CascadeModel& model);

/// Uniformly sampled trajectories of every scale.
struct CascadeTrajectory {
  std::vector<double> t;                     // steps + 1 points
  std::vector<std::vector<double>> scales;   // [scale][point]

  const std::vector<double>& top() const { return scales.front(); }
};

/// Classical RK4 on the coupled system with step (b - a) / steps.
CascadeTrajectory simulate_direct(const CascadeModel& model, int steps);

}  // namespace nps7
