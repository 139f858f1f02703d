#include "lefschetz/error.hpp"

namespace lefschetz {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotUnivariate: return "NotUnivariate";
    case ErrorCode::ConstantInVariable: return "ConstantInVariable";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::AxisOnCurve: return "AxisOnCurve";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::NonzeroComposition: return "NonzeroComposition";
    case ErrorCode::InvalidCellCounts: return "InvalidCellCounts";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::ZeroT: return "ZeroT";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

}  // namespace lefschetz
