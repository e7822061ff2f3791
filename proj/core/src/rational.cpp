#include "nps7/rational.hpp"

#include "nps7/error.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace nps7 {

namespace {

using Integer = ExactRational::Integer;
using boost::multiprecision::cpp_rational;

Integer pow10(long exponent) {
  Integer result = 1;
  for (long i = 0; i < exponent; ++i) result *= 10;
  return result;
}

// Decimal literal: [sign] digits [. digits] [(e|E) [sign] digits]
cpp_rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  Integer mantissa = 0;
  long scale = 0;
  bool any_digit = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    mantissa = mantissa * 10 + (text[pos] - '0');
    any_digit = true;
    ++pos;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      mantissa = mantissa * 10 + (text[pos] - '0');
      --scale;
      any_digit = true;
      ++pos;
    }
  }
  if (!any_digit) throw ParseError("expected a number", pos);
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    long exponent = 0;
    bool exp_digit = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      exponent = exponent * 10 + (text[pos] - '0');
      if (exponent > 4000) throw ParseError("exponent out of range", pos);
      exp_digit = true;
      ++pos;
    }
    if (!exp_digit) throw ParseError("expected exponent digits", pos);
    scale += exp_negative ? -exponent : exponent;
  }
  if (pos != text.size()) throw ParseError("unexpected character in number", pos);
  cpp_rational value = scale >= 0 ? cpp_rational(mantissa * pow10(scale))
                                  : cpp_rational(mantissa, pow10(-scale));
  return negative ? cpp_rational(-value) : value;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

}  // namespace

ExactRational::ExactRational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw ValidationError("rational with zero denominator");
  value_ = cpp_rational(numerator, denominator);
}

ExactRational ExactRational::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty rational literal", 0);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_decimal(text));
  const cpp_rational num = parse_decimal(trim(text.substr(0, slash)));
  const cpp_rational den = parse_decimal(trim(text.substr(slash + 1)));
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return ExactRational(cpp_rational(num / den));
}

ExactRational ExactRational::from_double(double value) {
  if (!std::isfinite(value)) throw ValidationError("cannot convert a non-finite value to a rational");
  int exponent = 0;
  const double fraction = std::frexp(value, &exponent);
  // fraction * 2^53 is an integer for every double.
  const auto scaled = static_cast<long long>(std::ldexp(fraction, 53));
  exponent -= 53;
  Integer num = scaled;
  Integer den = 1;
  if (exponent >= 0) {
    num <<= exponent;
  } else {
    den <<= -exponent;
  }
  return ExactRational(cpp_rational(num, den));
}

ExactRational::Integer ExactRational::numerator() const {
  return boost::multiprecision::numerator(value_);
}

ExactRational::Integer ExactRational::denominator() const {
  return boost::multiprecision::denominator(value_);
}

std::string ExactRational::str() const {
  const Integer den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

ExactRational ExactRational::operator-() const { return ExactRational(cpp_rational(-value_)); }

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw ValidationError("division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

ExactRational abs(const ExactRational& value) { return value < ExactRational(0) ? -value : value; }

}  // namespace nps7
