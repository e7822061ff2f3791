#pragma once

#include "nps7/rational.hpp"

#include <array>

namespace nps7 {

/// Weights of the seventh-derivative values in the interior consistency
/// relation. Valid parameter sets satisfy alpha + beta + gamma + delta = 60.
struct SplineParams {
  ExactRational alpha;
  ExactRational beta;
  ExactRational gamma;
  ExactRational delta;

  ExactRational sum() const { return alpha + beta + gamma + delta; }

  /// The eight stencil weights (alpha, beta, gamma, delta, delta, gamma, beta, alpha).
  template <typename Real>
  std::array<Real, 8> stencil() const {
    const Real a = alpha.to<Real>();
    const Real b = beta.to<Real>();
    const Real c = gamma.to<Real>();
    const Real d = delta.to<Real>();
    return {a, b, c, d, d, c, b, a};
  }

  friend bool operator==(const SplineParams&, const SplineParams&) = default;
};

/// Coefficients of h^m y^(m)(t_i), m = 7..12, in the expansion of the
/// interior-row truncation error.
struct TruncationCoeffs {
  ExactRational c7, c8, c9, c10, c11, c12;

  std::array<ExactRational, 6> as_array() const { return {c7, c8, c9, c10, c11, c12}; }
};

inline constexpr double kParamSumTolerance = 1e-9;

/// Returns p when |sum - 60| <= 1e-9; otherwise throws ValidationError naming the sum.
const SplineParams& validate(const SplineParams& p);

/// alpha = 151/15 - delta/5, beta = -301/6 + delta, gamma = 1001/10 - 9 delta/5.
/// Every member of this family annihilates c9..c12.
SplineParams optimal_family(const ExactRational& delta);

/// Evaluates the closed forms in theta = omega * h. The printed forms are not
/// normalized, so the result generally does not satisfy the sum constraint.
/// Throws ValidationError when theta or sin(theta) is within 1e-12 of zero.
SplineParams from_theta(double theta);

/// Floating-point version of from_theta, without the exact conversion.
std::array<double, 4> theta_weights(double theta);

TruncationCoeffs truncation_coeffs(const SplineParams& p);

/// Leading h^9 y^(9) error constants of the six standard end rows.
inline constexpr std::array<double, 6> kStandardEndRowErrorConstants = {
    -5.778, -6.472, -7.230, -19.288, -25.620, -33.020};

}  // namespace nps7
