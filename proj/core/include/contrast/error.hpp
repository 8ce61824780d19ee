#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace contrast {

// Every failure raised by the library carries one of these codes. The CLI maps
// them onto stable process exit codes, so values must not be renumbered.
enum class ErrorCode {
  kZeroDenominator = 1,
  kMalformedInput,
  kOutOfRange,
  kDuplicateEdge,
  kSelfLoop,
  kDisconnected,
  kInvalidGreyscale,
  kLengthMismatch,
  kImproperColouring,
  kNotLightestEdge,
  kInvalidArgument,
  kNotBipartite,
  kAdjacencyViolation,
  kPreconditionFailed,
  kBudgetExceeded,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace contrast
