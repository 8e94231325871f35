#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singspec {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, spectrum or catalog text. `position()` is a byte
/// offset into the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The ideal is not m-primary: the germ has no isolated singularity at 0.
class NotIsolatedError : public Error {
 public:
  using Error::Error;
};

/// The Mora reduction-step budget was exhausted.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// Newton non-degeneracy could not be established and was not assumed.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Internal cross-check failed (e.g. mu changed by convenientization).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Catalog lookup of a family name that is not present.
class UnknownFamilyError : public Error {
 public:
  using Error::Error;
};

}  // namespace singspec
