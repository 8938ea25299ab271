#include "conway/error.hpp"

namespace conway {

const char* error_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::TagMismatch: return "tag-mismatch";
        case ErrorKind::UnsupportedRing: return "unsupported-ring";
        case ErrorKind::NotInvertible: return "not-invertible";
        case ErrorKind::NotASuperbase: return "not-a-superbase";
        case ErrorKind::InconsistentInput: return "inconsistent-input";
        case ErrorKind::NotUnimodular: return "not-unimodular";
        case ErrorKind::Classification: return "classification";
        case ErrorKind::SquareOrInvalidDiscriminant: return "square-or-invalid-discriminant";
        case ErrorKind::InvalidDiscriminant: return "invalid-discriminant";
        case ErrorKind::NotPrimitive: return "not-primitive";
        case ErrorKind::Divisibility: return "divisibility";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Dibasis: return "dibasis";
        case ErrorKind::Degenerate: return "degenerate";
        case ErrorKind::InvariantViolation: return "invariant-violation";
        case ErrorKind::SearchExhausted: return "search-exhausted";
        case ErrorKind::Budget: return "budget";
        case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace conway
