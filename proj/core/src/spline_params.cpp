#include "nps7/spline_params.hpp"

#include "nps7/error.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace nps7 {

const SplineParams& validate(const SplineParams& p) {
  const ExactRational deviation = abs(p.sum() - ExactRational(60));
  if (deviation.to_double() > kParamSumTolerance) {
    const ExactRational sum = p.sum();
    std::ostringstream text;
    if (sum.denominator() == 1) {
      text << sum.str();
    } else {
      text << std::setprecision(17) << sum.to_double();
    }
    throw ValidationError("spline parameters must satisfy alpha+beta+gamma+delta = 60, got sum " +
                          text.str());
  }
  return p;
}

SplineParams optimal_family(const ExactRational& delta) {
  const ExactRational alpha = ExactRational(151) / 15 - delta / 5;
  const ExactRational beta = ExactRational(-301) / 6 + delta;
  const ExactRational gamma = ExactRational(1001) / 10 - ExactRational(9) * delta / 5;
  return {alpha, beta, gamma, delta};
}

std::array<double, 4> theta_weights(double theta) {
  const double s = std::sin(theta);
  if (std::abs(theta) < 1e-12 || std::abs(s) < 1e-12) {
    throw ValidationError("theta = " + std::to_string(theta) +
                          " is singular (theta or sin(theta) vanishes)");
  }
  const double c = std::cos(theta);
  const double t1 = theta * s;
  const double t3 = std::pow(theta, 3) * s;
  const double t5 = std::pow(theta, 5) * s;
  const double t7 = std::pow(theta, 7) * s;
  const double alpha = 120.0 * (c - 1.0) / t7 + 60.0 / t5 - 5.0 / t3 + 1.0 / (6.0 * t1);
  const double beta = 600.0 * (1.0 - c) / t7 - 60.0 * (2.0 * c - 3.0) / t5 +
                      5.0 * (2.0 * c - 9.0) / t3 - (2.0 * c - 57.0) / (6.0 * t1);
  const double gamma = 1080.0 * (c - 1.0) / t7 + 180.0 * (2.0 * c + 1.0) / t5 +
                       45.0 * (2.0 * c + 1.0) / t3 - (38.0 * c - 101.0) / (2.0 * t1);
  const double delta = 600.0 * (1.0 - c) / t7 - 60.0 * (4.0 * c + 1.0) / t5 -
                       5.0 * (20.0 * c - 1.0) / t3 - (604.0 * c - 359.0) / (6.0 * t1);
  return {alpha, beta, gamma, delta};
}

SplineParams from_theta(double theta) {
  const auto w = theta_weights(theta);
  return {ExactRational::from_double(w[0]), ExactRational::from_double(w[1]),
          ExactRational::from_double(w[2]), ExactRational::from_double(w[3])};
}

TruncationCoeffs truncation_coeffs(const SplineParams& p) {
  const ExactRational& a = p.alpha;
  const ExactRational& b = p.beta;
  const ExactRational& g = p.gamma;
  const ExactRational& d = p.delta;
  const ExactRational excess = a + b + g + d - 60;
  TruncationCoeffs out;
  out.c7 = ExactRational(2) * excess;
  out.c8 = excess;
  out.c9 = (ExactRational(-100) + 25 * a + 13 * b + 5 * g + d) / 2;
  out.c10 = (ExactRational(-120) + 37 * a + 19 * b + 7 * g + d) / 6;
  out.c11 = (ExactRational(-228) + 337 * a + 97 * b + 17 * g + d) / 24;
  out.c12 = (ExactRational(-380) + 781 * a + 211 * b + 31 * g + d) / 120;
  return out;
}

}  // namespace nps7
