#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace nps7 {

/// Arbitrary-precision rational number with a canonical (reduced, positive
/// denominator) representation. Published coefficients exceed 64-bit range,
/// so every table value lives here until it is materialized as a float.
class ExactRational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  ExactRational() = default;
  ExactRational(long long value) : value_(value) {}  // NOLINT(implicit)
  ExactRational(const Integer& numerator, const Integer& denominator);

  /// Accepts "p", "p/q", or a decimal literal ("25.5", "-1e-3"); decimals
  /// are converted exactly (0.1 -> 1/10).
  static ExactRational parse(std::string_view text);

  /// The exact value of a finite binary floating-point number.
  static ExactRational from_double(double value);

  Integer numerator() const;
  Integer denominator() const;

  bool is_zero() const { return value_ == 0; }

  /// Correctly rounded to within an ulp of the target type.
  template <typename Real>
  Real to() const {
    using Wide = boost::multiprecision::cpp_bin_float_100;
    Wide q = Wide(numerator()) / Wide(denominator());
    return static_cast<Real>(q);
  }
  double to_double() const { return to<double>(); }

  /// "p/q", or "p" when the denominator is one.
  std::string str() const;

  ExactRational operator-() const;
  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const ExactRational& lhs, const ExactRational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs) {
    if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
    if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit ExactRational(boost::multiprecision::cpp_rational value) : value_(std::move(value)) {}

  boost::multiprecision::cpp_rational value_;
};

ExactRational abs(const ExactRational& value);

}  // namespace nps7
