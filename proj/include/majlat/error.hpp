#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace majlat {

enum class ErrorCode {
  EmptyInput,
  NegativeEntry,
  NotNormalized,
  NotSorted,
  ZeroDimension,
  NotConcave,
  NotMonotone,
  BadEndpoints,
  DimensionMismatch,
  EmptyFamily,
  InvalidExtremal,
  NegativeRadius,
  DimensionTooLarge,
  NegativeProbability,
  InvalidStateSpec,
  AlphaOutOfRange,
  BlockDimensionError,
  AlphaMinOutOfRange,
  ParseError,
  InvalidJob,
  IoError,
};

std::string_view error_name(ErrorCode code) noexcept;

// All library failures are reported through this type; the code names the
// violated invariant and the message carries the details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace majlat
