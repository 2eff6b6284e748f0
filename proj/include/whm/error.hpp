#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace whm {

enum class ErrorKind {
  CompositeModulus,
  DivisionByZero,
  LengthMismatch,
  InvalidBlockStructure,
  InvalidCrossover,
  ZeroCode,
  BudgetExceeded,
  InvalidDistance,
  InvalidDimension,
  NonIntegralTransform,
  LengthExceedsField,
  InvalidParameter,
  MalformedInput,
  LpInternal,
};

/// Stable machine-readable name, printed by the CLI on failure.
std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace whm
