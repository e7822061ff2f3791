#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace nps7 {

enum class Trig { None, Sin, Cos };

/// coeff * t^power * exp(exp_rate * t) * trig(trig_freq * t + trig_phase)
struct ForceTerm {
  double coeff = 0.0;
  int power = 0;
  double exp_rate = 0.0;
  Trig trig = Trig::None;
  double trig_freq = 0.0;
  double trig_phase = 0.0;

  template <typename Real>
  Real eval(Real t) const;

  /// Same function shape (everything except the coefficient).
  bool same_shape(const ForceTerm& other) const;

  /// Ordering used for printing: power, then exp_rate, then trig.
  friend std::partial_ordering shape_order(const ForceTerm& lhs, const ForceTerm& rhs);

  friend bool operator==(const ForceTerm&, const ForceTerm&) = default;
};

/// Finite sum of ForceTerm; closed under differentiation. The empty sum is
/// the zero function. Values are immutable once built.
class ForceExpr {
 public:
  ForceExpr() = default;
  explicit ForceExpr(std::vector<ForceTerm> terms);

  static ForceExpr constant(double value);
  /// c * t^power
  static ForceExpr monomial(double coeff, int power);

  const std::vector<ForceTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  template <typename Real>
  Real eval(Real t) const;
  double operator()(double t) const { return eval(t); }

  ForceExpr operator+(const ForceExpr& rhs) const;
  ForceExpr operator-(const ForceExpr& rhs) const;
  ForceExpr scaled(double factor) const;

  /// Canonical text form accepted by parse_force().
  std::string str() const;

  friend bool operator==(const ForceExpr&, const ForceExpr&) = default;

 private:
  std::vector<ForceTerm> terms_;
};

/// Exact derivative of the given order; order 0 returns the input.
ForceExpr derivative(const ForceExpr& expr, int order = 1);

/// Parses the term grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := number | 't' ['^' int] | 'exp(' lin ')' | ('sin'|'cos') '(' lin ')'
///   lin    := [number '*'] 't' [('+'|'-') number]
/// Throws ParseError on malformed input or unknown function names.
ForceExpr parse_force(std::string_view text);

extern template double ForceTerm::eval<double>(double) const;
extern template long double ForceTerm::eval<long double>(long double) const;
extern template double ForceExpr::eval<double>(double) const;
extern template long double ForceExpr::eval<long double>(long double) const;

}  // namespace nps7
