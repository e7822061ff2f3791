#include "nps7/fixtures.hpp"

#include <cmath>

namespace nps7::fixtures {

ReferenceProblem example1() {
  const double s = std::sin(1.0);
  const double c = std::cos(1.0);
  IvpProblem p;
  p.a = -1.0;
  p.b = 1.0;
  p.f = parse_force("1");
  p.g = parse_force("-t^2*cos(t) + 43*cos(t) + t^2*sin(t) - 14*t*sin(t) - sin(t)");
  p.u = {0.0, 2 * s, -4 * c - 2 * s, 6 * c - 6 * s, 8 * c + 12 * s, -20 * c + 10 * s,
         -12 * c - 30 * s};
  return {"example1", p, parse_force("t^2*sin(t) - sin(t)")};
}

ReferenceProblem example2() {
  IvpProblem p;
  p.a = 0.0;
  p.b = 1.0;
  p.f = parse_force("-1");
  p.g = parse_force("-35*exp(t) - 14*t*exp(t)");
  p.u = {0.0, 1.0, 0.0, -3.0, -8.0, -15.0, -24.0};
  return {"example2", p, parse_force("t*exp(t) - t^2*exp(t)")};
}

ReferenceProblem example3() {
  IvpProblem p;
  p.a = 0.0;
  p.b = 1.0;
  p.f = ForceExpr();
  // 7(-6e^t + e^t(1-t)) + (-7e^t + e^t(1-t)) t, expanded.
  p.g = parse_force("-35*exp(t) - 13*t*exp(t) - t^2*exp(t)");
  p.u = {0.0, 1.0, 0.0, -3.0, -8.0, -15.0, -24.0};
  return {"example3", p, parse_force("t*exp(t) - t^2*exp(t)")};
}

std::vector<ReferenceProblem> all_examples() { return {example1(), example2(), example3()}; }

std::vector<SplineParams> table_param_sets() {
  return {
      {ExactRational(1) / 2, ExactRational(19) / 2, ExactRational(49) / 2, ExactRational(51) / 2},
      {0, 0, 0, 60},
      {10, 10, 10, 30},
  };
}

std::vector<TableCell> published_tables() {
  using M = EndConditionMode;
  std::vector<TableCell> cells;
  auto standard = [&cells](int table, int example, int n, double c0, double c1, double c2) {
    cells.push_back({table, example, M::Standard, 0, n, c0, false});
    cells.push_back({table, example, M::Standard, 1, n, c1, false});
    cells.push_back({table, example, M::Standard, 2, n, c2, false});
  };
  auto improved = [&cells](int table, int example, int n, double value) {
    cells.push_back({table, example, M::Improved, 0, n, value, n == 10});
  };

  standard(1, 1, 12, 2.88e-1, 3.04e-1, 2.76e-1);
  standard(1, 1, 24, 3.09e-2, 3.56e-2, 2.73e-2);
  standard(1, 1, 48, 2.5e-3, 3.9e-3, 1.4e-3);
  standard(1, 1, 96, 1.70e-4, 7.37e-4, 3.19e-4);

  improved(2, 1, 10, 2.25e-1);
  improved(2, 1, 20, 2.08e-6);
  improved(2, 1, 40, 7.50e-7);

  standard(3, 2, 10, 1.5e-3, 1.6e-3, 1.5e-3);
  standard(3, 2, 20, 1.75e-4, 1.94e-4, 1.60e-4);
  standard(3, 2, 40, 1.81e-5, 2.62e-5, 1.32e-5);

  improved(4, 2, 10, 1.82e-1);
  improved(4, 2, 12, 2.15e-8);
  improved(4, 2, 15, 3.65e-9);

  standard(5, 3, 9, 2.0e-3, 2.22e-3, 1.5e-3);
  standard(5, 3, 18, 2.26e-4, 2.66e-4, 1.60e-4);
  standard(5, 3, 36, 2.16e-5, 3.46e-5, 1.32e-5);

  improved(6, 3, 10, 1.82e-1);
  improved(6, 3, 12, 2.33e-8);
  improved(6, 3, 15, 1.67e-8);
  return cells;
}

}  // namespace nps7::fixtures
