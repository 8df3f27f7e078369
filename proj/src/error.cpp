#include "sigma/error.hpp"

namespace sigma {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroCharacter: return "ZeroCharacter";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::WrongSpace: return "WrongSpace";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::NotAsymptotic: return "NotAsymptotic";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::DepthExhausted: return "DepthExhausted";
    case ErrorCode::EndNotFixed: return "EndNotFixed";
    case ErrorCode::EmptyConfiguration: return "EmptyConfiguration";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::UnsupportedNumberForm: return "UnsupportedNumberForm";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::NotTranslationAction: return "NotTranslationAction";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace sigma
