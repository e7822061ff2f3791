#pragma once

#include "nps7/forces.hpp"

#include <array>
#include <vector>

namespace nps7 {

/// y^(N)(t) + f(t) y(t) = g(t) on [a, b] with y^(m)(a) = u[m], m < N.
/// Any order; only the Runge-Kutta oracle consumes this general form.
struct HighOrderIvp {
  int order = 7;
  double a = 0.0;
  double b = 1.0;
  ForceExpr f;
  ForceExpr g;
  std::vector<double> u;

  void validate() const;
};

/// y^(7)(t) + f(t) y(t) = g(t) on [a, b], with y^(m)(a) = u[m] for m = 0..6.
struct IvpProblem {
  double a = 0.0;
  double b = 1.0;
  ForceExpr f;
  ForceExpr g;
  std::array<double, 7> u{};

  /// Checks a < b and finite initial data; throws ValidationError.
  void validate() const;

  /// y^(7)(a) = g(a) - f(a) u0, taken from the equation itself.
  double seventh_derivative_at_start() const { return g(a) - f(a) * u[0]; }

  HighOrderIvp general() const;
};

}  // namespace nps7
