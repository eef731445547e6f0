#pragma once

#include <stdexcept>
#include <string>

namespace timecat {

// Machine-readable error codes. The CLI prints them next to the message.
enum class ErrorCode {
  kBoundaryMismatch,
  kUnknownName,
  kDuplicateName,
  kInvalidRegrade,
  kSkewCell,
  kOverlapOrGap,
  kNonSweepable,
  kShapeMismatch,
  kMissingAssignment,
  kCycle,
  kSyntax,
  kArity,
  kRuleRejected,
  kInvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace timecat
