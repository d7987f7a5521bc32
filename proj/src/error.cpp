#include "stringy/error.hpp"

namespace stringy {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OriginNotInterior: return "OriginNotInterior";
    case ErrorKind::NotGorenstein: return "NotGorenstein";
    case ErrorKind::NotReflexivePair: return "NotReflexivePair";
    case ErrorKind::DimensionBudgetExceeded: return "DimensionBudgetExceeded";
    case ErrorKind::DegenerateLift: return "DegenerateLift";
    case ErrorKind::InvalidSubdivision: return "InvalidSubdivision";
    case ErrorKind::NotEulerian: return "NotEulerian";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::DivisionNotExact: return "DivisionNotExact";
    case ErrorKind::NegativeHodgeNumber: return "NegativeHodgeNumber";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::ConeNotInFan: return "ConeNotInFan";
    case ErrorKind::PointOutsideCone: return "PointOutsideCone";
    case ErrorKind::FieldCharacteristicTooSmall: return "FieldCharacteristicTooSmall";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotGenericAfterRetries: return "NotGenericAfterRetries";
    case ErrorKind::CapTooSmall: return "CapTooSmall";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace stringy
