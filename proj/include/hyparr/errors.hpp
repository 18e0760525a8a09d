#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyparr {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("polynomial ring mismatch") {}
};

/// Precondition violated by the caller (bad index, zero divisor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gröbner computation exceeded the configured degree guard.
class ResourceError : public Error {
 public:
  ResourceError(unsigned degree, unsigned guard)
      : Error("degree guard exceeded: degree " + std::to_string(degree) + " > guard " +
              std::to_string(guard)),
        degree_(degree),
        guard_(guard) {}
  unsigned degree() const noexcept { return degree_; }
  unsigned guard() const noexcept { return guard_; }

 private:
  unsigned degree_;
  unsigned guard_;
};

/// A singular locus contains points that are not defined over the rationals.
class IrrationalLocus : public Error {
 public:
  using Error::Error;
};

/// A system that was expected to be zero-dimensional is not.
class PositiveDimensional : public Error {
 public:
  using Error::Error;
};

}  // namespace hyparr
