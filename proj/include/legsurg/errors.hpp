#pragma once

#include <stdexcept>
#include <string>

namespace legsurg {

// Mathematical input outside an operation's domain (n < 2, det != 1, r > -1, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Caller misuse: dimension mismatch, inconsistent profiles, wrong hypothesis routing.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A point or value failed a defining equation. `residual` holds the offending
// quantity in canonical text form.
class PreconditionError : public std::domain_error {
public:
  PreconditionError(const std::string& what, std::string residual)
      : std::domain_error(what), residual_(std::move(residual)) {}

  const std::string& residual() const noexcept { return residual_; }

private:
  std::string residual_;
};

// Raised when an arbitrary-precision value does not fit a requested fixed width.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

}  // namespace legsurg
