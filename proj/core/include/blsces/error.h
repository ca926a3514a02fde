#ifndef BLSCES_ERROR_H_
#define BLSCES_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace blsces {

enum class ErrorCode {
  kInvalidArgument,
  kOffCurve,
  kNotInSubgroup,
  kMalformedEncoding,
  kNotQuadraticResidue,
  kCounterExhausted,
  kLengthMismatch,
  kDuplicateMessage,
  kWidthMismatch,
  kIndexOutOfRange,
  kHiddenClaim,
  kMissingWitness,
  kPredicateArity,
  kParse,
  kUnsupportedBackend,
  kUnsatisfied,
};

std::string_view error_code_name(ErrorCode code);

// Thrown for malformed input and contract violations. Cryptographic rejects
// are reported through verdict objects, never through exceptions.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace blsces

#endif  // BLSCES_ERROR_H_
