#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weildesc {

enum class ErrorKind {
  DivisionByZero,
  UnknownDerivation,
  NotMonic,
  NotSeparable,
  InvalidAlgebra,
  NotInvertible,
  IndexOutOfRange,
  UnassignedVariable,
  NonCommutingDerivations,
  BracketNotInFamily,
  SyntaxError,
  UnknownIdentifier,
  NonIntegerExponent,
  DivisionByVariable,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and tests) can dispatch on it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace weildesc
