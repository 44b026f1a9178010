#ifndef LBDIV_ERROR_H_
#define LBDIV_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lbdiv {

enum class ErrorCode {
  kInvalidScore,         // non-finite entry, or outside a required domain
  kSizeMismatch,         // ground-set sizes disagree
  kInvalidPermutation,   // not a bijection on {1..n}
  kInvalidArgument,      // parameter violates a precondition
  kInvalidFunction,      // set-function family invariant violated
  kCapacity,             // ground set too large for an exhaustive method
  kInternalConsistency,  // numerical result contradicts a guaranteed property
  kParse,                // malformed external input
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lbdiv

#endif  // LBDIV_ERROR_H_
