#include "nps7/forces.hpp"

#include "nps7/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <tuple>

namespace nps7 {

namespace {

template <typename Real>
Real int_pow(Real base, int power) {
  Real result = 1;
  for (int i = 0; i < power; ++i) result *= base;
  return result;
}

int trig_rank(Trig trig) { return static_cast<int>(trig); }

auto shape_key(const ForceTerm& term) {
  return std::make_tuple(term.power, term.exp_rate, trig_rank(term.trig), term.trig_freq,
                         term.trig_phase);
}

// Sort by shape, merge equal shapes, drop zero terms.
std::vector<ForceTerm> normalize(std::vector<ForceTerm> terms) {
  for (auto& term : terms) {
    if (term.trig == Trig::None) {
      term.trig_freq = 0.0;
      term.trig_phase = 0.0;
    }
  }
  std::stable_sort(terms.begin(), terms.end(), [](const ForceTerm& lhs, const ForceTerm& rhs) {
    return shape_key(lhs) < shape_key(rhs);
  });
  std::vector<ForceTerm> merged;
  for (const auto& term : terms) {
    if (!merged.empty() && merged.back().same_shape(term)) {
      merged.back().coeff += term.coeff;
    } else {
      merged.push_back(term);
    }
  }
  std::erase_if(merged, [](const ForceTerm& term) { return term.coeff == 0.0; });
  return merged;
}

std::string format_number(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string format_linear(double freq, double offset) {
  std::string out = format_number(freq) + "*t";
  if (offset > 0) out += "+" + format_number(offset);
  if (offset < 0) out += "-" + format_number(-offset);
  return out;
}

// Prints |coeff| and the factors; the caller supplies the sign.
std::string format_term_magnitude(const ForceTerm& term) {
  std::string out = format_number(std::abs(term.coeff));
  if (term.power == 1) out += "*t";
  if (term.power > 1) out += "*t^" + std::to_string(term.power);
  if (term.exp_rate != 0.0) out += "*exp(" + format_linear(term.exp_rate, 0.0) + ")";
  if (term.trig != Trig::None) {
    out += term.trig == Trig::Sin ? "*sin(" : "*cos(";
    out += format_linear(term.trig_freq, term.trig_phase) + ")";
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ForceExpr parse() {
    std::vector<ForceTerm> terms;
    skip_space();
    double sign = 1.0;
    if (accept('-')) {
      sign = -1.0;
    } else {
      accept('+');
    }
    terms.push_back(term(sign));
    while (true) {
      skip_space();
      if (accept('+')) {
        terms.push_back(term(1.0));
      } else if (accept('-')) {
        terms.push_back(term(-1.0));
      } else {
        break;
      }
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return ForceExpr(std::move(terms));
  }

 private:
  ForceTerm term(double sign) {
    ForceTerm out;
    out.coeff = sign;
    bool have_trig = false;
    factor(out, have_trig);
    while (true) {
      skip_space();
      if (!accept('*')) break;
      factor(out, have_trig);
    }
    return out;
  }

  void factor(ForceTerm& out, bool& have_trig) {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a factor");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      out.coeff *= number();
      return;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected a factor");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "t") {
      skip_space();
      int power = 1;
      if (accept('^')) {
        skip_space();
        const double value = number();
        if (value < 0 || value != std::floor(value) || value > 1000) {
          fail("exponent of t must be a nonnegative integer");
        }
        power = static_cast<int>(value);
      }
      out.power += power;
      return;
    }
    if (name != "exp" && name != "sin" && name != "cos") {
      pos_ = start;
      fail("unknown function '" + std::string(name) + "'");
    }
    skip_space();
    expect('(');
    const auto [freq, offset] = linear();
    skip_space();
    expect(')');
    if (name == "exp") {
      out.exp_rate += freq;
      out.coeff *= std::exp(offset);
      return;
    }
    if (have_trig) {
      pos_ = start;
      fail("a term may contain at most one sin/cos factor");
    }
    have_trig = true;
    out.trig = name == "sin" ? Trig::Sin : Trig::Cos;
    out.trig_freq = freq;
    out.trig_phase = offset;
  }

  // [sign] [number '*'] 't' [('+'|'-') number]
  std::pair<double, double> linear() {
    skip_space();
    double freq = 1.0;
    if (accept('-')) {
      freq = -1.0;
    } else {
      accept('+');
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] != 't') {
      freq *= number();
      skip_space();
      expect('*');
      skip_space();
    }
    expect('t');
    skip_space();
    double offset = 0.0;
    if (accept('+')) {
      skip_space();
      offset = number();
    } else if (accept('-')) {
      skip_space();
      offset = -number();
    }
    return {freq, offset};
  }

  double number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    double value = 0.0;
    const auto result = std::from_chars(first, last, value, std::chars_format::general);
    if (result.ec != std::errc() || *first == '-' || *first == '+') fail("expected a number");
    pos_ += static_cast<std::size_t>(result.ptr - first);
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

template <typename Real>
Real ForceTerm::eval(Real t) const {
  Real value = static_cast<Real>(coeff) * int_pow(t, power);
  if (exp_rate != 0.0) value *= std::exp(static_cast<Real>(exp_rate) * t);
  switch (trig) {
    case Trig::Sin:
      value *= std::sin(static_cast<Real>(trig_freq) * t + static_cast<Real>(trig_phase));
      break;
    case Trig::Cos:
      value *= std::cos(static_cast<Real>(trig_freq) * t + static_cast<Real>(trig_phase));
      break;
    case Trig::None:
      break;
  }
  return value;
}

bool ForceTerm::same_shape(const ForceTerm& other) const {
  return shape_key(*this) == shape_key(other);
}

std::partial_ordering shape_order(const ForceTerm& lhs, const ForceTerm& rhs) {
  return shape_key(lhs) <=> shape_key(rhs);
}

ForceExpr::ForceExpr(std::vector<ForceTerm> terms) : terms_(normalize(std::move(terms))) {}

ForceExpr ForceExpr::constant(double value) { return monomial(value, 0); }

ForceExpr ForceExpr::monomial(double coeff, int power) {
  ForceTerm term;
  term.coeff = coeff;
  term.power = power;
  return ForceExpr({term});
}

template <typename Real>
Real ForceExpr::eval(Real t) const {
  Real sum = 0;
  for (const auto& term : terms_) sum += term.eval(t);
  return sum;
}

ForceExpr ForceExpr::operator+(const ForceExpr& rhs) const {
  std::vector<ForceTerm> all = terms_;
  all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
  return ForceExpr(std::move(all));
}

ForceExpr ForceExpr::operator-(const ForceExpr& rhs) const { return *this + rhs.scaled(-1.0); }

ForceExpr ForceExpr::scaled(double factor) const {
  std::vector<ForceTerm> out = terms_;
  for (auto& term : out) term.coeff *= factor;
  return ForceExpr(std::move(out));
}

std::string ForceExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const bool negative = terms_[i].coeff < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += format_term_magnitude(terms_[i]);
  }
  return out;
}

ForceExpr derivative(const ForceExpr& expr, int order) {
  if (order < 0) throw ValidationError("derivative order must be nonnegative");
  ForceExpr current = expr;
  for (int k = 0; k < order; ++k) {
    std::vector<ForceTerm> next;
    next.reserve(current.terms().size() * 3);
    for (const auto& term : current.terms()) {
      if (term.power > 0) {
        ForceTerm d = term;
        d.coeff *= term.power;
        d.power -= 1;
        next.push_back(d);
      }
      if (term.exp_rate != 0.0) {
        ForceTerm d = term;
        d.coeff *= term.exp_rate;
        next.push_back(d);
      }
      if (term.trig != Trig::None && term.trig_freq != 0.0) {
        ForceTerm d = term;
        if (term.trig == Trig::Sin) {
          d.coeff *= term.trig_freq;
          d.trig = Trig::Cos;
        } else {
          d.coeff *= -term.trig_freq;
          d.trig = Trig::Sin;
        }
        next.push_back(d);
      }
    }
    current = ForceExpr(std::move(next));
  }
  return current;
}

ForceExpr parse_force(std::string_view text) { return Parser(text).parse(); }

template double ForceTerm::eval<double>(double) const;
template long double ForceTerm::eval<long double>(long double) const;
template double ForceExpr::eval<double>(double) const;
template long double ForceExpr::eval<long double>(long double) const;

}  // namespace nps7
