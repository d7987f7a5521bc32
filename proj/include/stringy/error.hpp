#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stringy {

/// Every failure the library reports carries one of these kinds; the name
/// is what the CLI and the C API surface to callers.
enum class ErrorKind {
  OriginNotInterior,
  NotGorenstein,
  NotReflexivePair,
  DimensionBudgetExceeded,
  DegenerateLift,
  InvalidSubdivision,
  NotEulerian,
  NotGraded,
  NotSimplicial,
  DivisionNotExact,
  NegativeHodgeNumber,
  NotComplete,
  ConeNotInFan,
  PointOutsideCone,
  FieldCharacteristicTooSmall,
  NotRegular,
  NotGenericAfterRetries,
  CapTooSmall,
  ParseError,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace stringy
