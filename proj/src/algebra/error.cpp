#include "galpoint/error.hpp"

namespace galpoint {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotPrime: return "NOT_PRIME";
    case ErrorCode::ReducibleModulus: return "REDUCIBLE_MODULUS";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::VarAbsent: return "VAR_ABSENT";
    case ErrorCode::DegreeTooLarge: return "DEGREE_TOO_LARGE";
    case ErrorCode::NotHomogeneous: return "NOT_HOMOGENEOUS";
    case ErrorCode::Reducible: return "REDUCIBLE";
    case ErrorCode::NotOnCurve: return "NOT_ON_CURVE";
    case ErrorCode::SingularPoint: return "SINGULAR_POINT";
    case ErrorCode::PrecisionExhausted: return "PRECISION_EXHAUSTED";
    case ErrorCode::IdenticallyZero: return "IDENTICALLY_ZERO";
    case ErrorCode::ZeroDivisor: return "ZERO_DIVISOR";
    case ErrorCode::ExtensionRequired: return "EXTENSION_REQUIRED";
    case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::NotAutomorphism: return "NOT_AUTOMORPHISM";
    case ErrorCode::RetriesExhausted: return "RETRIES_EXHAUSTED";
    case ErrorCode::NotFound: return "NOT_FOUND";
    case ErrorCode::SameFiber: return "SAME_FIBER";
    case ErrorCode::SamplingExhausted: return "SAMPLING_EXHAUSTED";
    case ErrorCode::NotBirational: return "NOT_BIRATIONAL";
    case ErrorCode::EliminationDegenerate: return "ELIMINATION_DEGENERATE";
    case ErrorCode::InsufficientMarks: return "INSUFFICIENT_MARKS";
    case ErrorCode::HypothesisViolation: return "HYPOTHESIS_VIOLATION";
    case ErrorCode::PreconditionFailed: return "PRECONDITION_FAILED";
    case ErrorCode::DegreeMismatch: return "DEGREE_MISMATCH";
    case ErrorCode::CertificationFailed: return "CERTIFICATION_FAILED";
    case ErrorCode::EquivalenceNotFound: return "EQUIVALENCE_NOT_FOUND";
    case ErrorCode::ScanTooLarge: return "SCAN_TOO_LARGE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnresolvedReference: return "UNRESOLVED_REFERENCE";
    case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

ErrorClass classify(ErrorCode code) {
    switch (code) {
    case ErrorCode::ExtensionRequired:
    case ErrorCode::CapExceeded:
    case ErrorCode::RetriesExhausted:
    case ErrorCode::NotFound:
    case ErrorCode::SamplingExhausted:
    case ErrorCode::InsufficientMarks:
    case ErrorCode::ScanTooLarge:
    case ErrorCode::PrecisionExhausted:
        return ErrorClass::ToolLimitation;
    case ErrorCode::NotBirational:
    case ErrorCode::DegreeMismatch:
    case ErrorCode::CertificationFailed:
    case ErrorCode::EquivalenceNotFound:
    case ErrorCode::Internal:
        return ErrorClass::Internal;
    default:
        return ErrorClass::InvalidInput;
    }
}

}  // namespace galpoint
