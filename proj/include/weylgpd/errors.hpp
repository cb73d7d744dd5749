#pragma once

#include <stdexcept>
#include <string>

namespace weylgpd {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input document.
class SyntaxError : public Error {
  public:
    using Error::Error;
};

// A structural invariant does not hold; invariant() names it.
class ValidationError : public Error {
  public:
    ValidationError(std::string invariant, const std::string &detail)
        : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}
    const std::string &invariant() const noexcept { return invariant_; }

  private:
    std::string invariant_;
};

class UnknownName : public Error {
  public:
    using Error::Error;
};

// Closure or enumeration grew past its budget; the graph is treated as infinite.
class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

class NotReduced : public Error {
  public:
    using Error::Error;
};

class RankNotTwo : public Error {
  public:
    using Error::Error;
};

class RootNotPresent : public Error {
  public:
    using Error::Error;
};

class GroupoidMismatch : public Error {
  public:
    using Error::Error;
};

class InvalidCovering : public Error {
  public:
    using Error::Error;
};

class DifferentHomSet : public Error {
  public:
    using Error::Error;
};

class EmptyHomSet : public Error {
  public:
    using Error::Error;
};

} // namespace weylgpd
