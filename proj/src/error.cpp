#include "majlat/error.hpp"

namespace majlat {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotSorted: return "NotSorted";
    case ErrorCode::ZeroDimension: return "ZeroDimension";
    case ErrorCode::NotConcave: return "NotConcave";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::BadEndpoints: return "BadEndpoints";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::InvalidExtremal: return "InvalidExtremal";
    case ErrorCode::NegativeRadius: return "NegativeRadius";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NegativeProbability: return "NegativeProbability";
    case ErrorCode::InvalidStateSpec: return "InvalidStateSpec";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::BlockDimensionError: return "BlockDimensionError";
    case ErrorCode::AlphaMinOutOfRange: return "AlphaMinOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidJob: return "InvalidJob";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace majlat
