#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nps7 {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text: expressions, rationals, config files.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A value violates a documented precondition or invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The requested case is outside what the solver implements.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Numerical breakdown, e.g. a singular system.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace nps7
