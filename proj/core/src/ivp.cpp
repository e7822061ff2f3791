#include "nps7/ivp.hpp"

#include "nps7/error.hpp"

#include <cmath>
#include <string>

namespace nps7 {

namespace {

void check_interval(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw ValidationError("interval must satisfy a < b, got [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
  }
}

}  // namespace

void HighOrderIvp::validate() const {
  check_interval(a, b);
  if (order < 1) throw ValidationError("order must be positive");
  if (static_cast<int>(u.size()) != order) {
    throw ValidationError("expected " + std::to_string(order) + " initial values, got " +
                          std::to_string(u.size()));
  }
  for (double v : u) {
    if (!std::isfinite(v)) throw ValidationError("initial values must be finite");
  }
}

void IvpProblem::validate() const {
  check_interval(a, b);
  for (double v : u) {
    if (!std::isfinite(v)) throw ValidationError("initial values must be finite");
  }
}

HighOrderIvp IvpProblem::general() const {
  return {7, a, b, f, g, std::vector<double>(u.begin(), u.end())};
}

}  // namespace nps7
