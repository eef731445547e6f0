#include "timecat/error.hpp"

namespace timecat {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBoundaryMismatch: return "boundary-mismatch";
    case ErrorCode::kUnknownName: return "unknown-name";
    case ErrorCode::kDuplicateName: return "duplicate-name";
    case ErrorCode::kInvalidRegrade: return "invalid-regrade";
    case ErrorCode::kSkewCell: return "skew-cell";
    case ErrorCode::kOverlapOrGap: return "overlap-or-gap";
    case ErrorCode::kNonSweepable: return "non-sweepable";
    case ErrorCode::kShapeMismatch: return "shape-mismatch";
    case ErrorCode::kMissingAssignment: return "missing-assignment";
    case ErrorCode::kCycle: return "cycle";
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kArity: return "arity";
    case ErrorCode::kRuleRejected: return "rule-rejected";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace timecat
