#include "lozenge/errors.hpp"

namespace lozenge {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::DepthTooLarge: return "DepthTooLarge";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::DegeneratePoints: return "DegeneratePoints";
    case ErrorCode::AmbiguousGeometry: return "AmbiguousGeometry";
    case ErrorCode::MixedSignProfile: return "MixedSignProfile";
    case ErrorCode::InconsistentVerdicts: return "InconsistentVerdicts";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace lozenge
