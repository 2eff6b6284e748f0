#include "whm/error.hpp"

namespace whm {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CompositeModulus: return "CompositeModulus";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidBlockStructure: return "InvalidBlockStructure";
    case ErrorKind::InvalidCrossover: return "InvalidCrossover";
    case ErrorKind::ZeroCode: return "ZeroCode";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidDistance: return "InvalidDistance";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::NonIntegralTransform: return "NonIntegralTransform";
    case ErrorKind::LengthExceedsField: return "LengthExceedsField";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::LpInternal: return "LpInternal";
  }
  return "Unknown";
}

}  // namespace whm
