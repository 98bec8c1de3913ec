#pragma once

#include <stdexcept>
#include <string>

namespace galpoint {

enum class ErrorCode {
    // algebra
    NotPrime,
    ReducibleModulus,
    InvalidArgument,
    VarAbsent,
    DegreeTooLarge,
    NotHomogeneous,
    // curve
    Reducible,
    NotOnCurve,
    SingularPoint,
    PrecisionExhausted,
    IdenticallyZero,
    ZeroDivisor,
    ExtensionRequired,
    // action
    CapExceeded,
    NotAutomorphism,
    RetriesExhausted,
    NotFound,
    SameFiber,
    // linsys
    SamplingExhausted,
    NotBirational,
    EliminationDegenerate,
    InsufficientMarks,
    // galois
    HypothesisViolation,
    PreconditionFailed,
    DegreeMismatch,
    CertificationFailed,
    EquivalenceNotFound,
    ScanTooLarge,
    // scenario / cli
    ParseError,
    UnresolvedReference,
    FieldMismatch,
    Internal,
};

/// How an error should be reported to a caller of the CLI.
enum class ErrorClass {
    InvalidInput,    // the user handed us something malformed or out of contract
    ToolLimitation,  // the criteria might hold but we cannot decide here (extension, caps, retries)
    Internal,        // a certificate failed to re-verify: an upstream bug
};

const char* to_string(ErrorCode code);
ErrorClass classify(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    ErrorClass error_class() const noexcept { return classify(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) fail(code, message);
}

}  // namespace galpoint
