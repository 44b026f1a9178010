#include "lbdiv/error.h"

namespace lbdiv {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidScore:
      return "invalid_score";
    case ErrorCode::kSizeMismatch:
      return "size_mismatch";
    case ErrorCode::kInvalidPermutation:
      return "invalid_permutation";
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kInvalidFunction:
      return "invalid_function";
    case ErrorCode::kCapacity:
      return "capacity";
    case ErrorCode::kInternalConsistency:
      return "internal_consistency";
    case ErrorCode::kParse:
      return "parse";
  }
  return "unknown";
}

}  // namespace lbdiv
