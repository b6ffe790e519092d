#ifndef ZOLO_ERROR_HPP
#define ZOLO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zolo {

enum class ErrorCode {
    kEmptySet,
    kDegenerateSegment,
    kDisjointness,
    kInvalidShape,
    kDomain,
    kSizeMismatch,
    kNonFinite,
    kTooFewSamples,
    kRepeatedPoints,
    kDegenerate,
    kConfig,
};

const char *to_string(ErrorCode code);

// Bad input: the caller asked for something outside an operation's contract.
class ValidationError : public std::invalid_argument {
  public:
    ValidationError(ErrorCode code, const std::string &what)
        : std::invalid_argument(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

// The input was valid but the computation broke down (non-finite results, empty SVD, ...).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline const char *to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::kEmptySet: return "empty set";
    case ErrorCode::kDegenerateSegment: return "degenerate segment";
    case ErrorCode::kDisjointness: return "sets not disjoint";
    case ErrorCode::kInvalidShape: return "invalid shape";
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kSizeMismatch: return "size mismatch";
    case ErrorCode::kNonFinite: return "non-finite value";
    case ErrorCode::kTooFewSamples: return "too few samples";
    case ErrorCode::kRepeatedPoints: return "repeated points";
    case ErrorCode::kDegenerate: return "degenerate input";
    case ErrorCode::kConfig: return "invalid configuration";
    }
    return "error";
}

} // namespace zolo

#endif // ZOLO_ERROR_HPP
