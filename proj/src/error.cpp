#include "pfister/error.hpp"

namespace pfister {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ValuationOfZero: return "ValuationOfZero";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularForm: return "SingularForm";
    case ErrorCode::InfiniteField: return "InfiniteField";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::NotPfisterShape: return "NotPfisterShape";
    case ErrorCode::ConstructionInapplicable: return "ConstructionInapplicable";
    case ErrorCode::HypothesesUnverified: return "HypothesesUnverified";
    case ErrorCode::RefutedBySpecialization: return "RefutedBySpecialization";
    case ErrorCode::MissingRepresentatives: return "MissingRepresentatives";
    case ErrorCode::NotTight: return "NotTight";
    case ErrorCode::InvalidContext: return "InvalidContext";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace pfister
