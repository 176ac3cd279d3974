#include "weildesc/error.hpp"

namespace weildesc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnknownDerivation: return "UnknownDerivation";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnassignedVariable: return "UnassignedVariable";
    case ErrorKind::NonCommutingDerivations: return "NonCommutingDerivations";
    case ErrorKind::BracketNotInFamily: return "BracketNotInFamily";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorKind::DivisionByVariable: return "DivisionByVariable";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace weildesc
