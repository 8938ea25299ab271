#pragma once

#include <stdexcept>
#include <string>

namespace conway {

enum class ErrorKind {
    TagMismatch,
    UnsupportedRing,
    NotInvertible,
    NotASuperbase,
    InconsistentInput,
    NotUnimodular,
    Classification,
    SquareOrInvalidDiscriminant,
    InvalidDiscriminant,
    NotPrimitive,
    Divisibility,
    Precondition,
    Dibasis,
    Degenerate,
    InvariantViolation,
    SearchExhausted,
    Budget,
    Parse,
};

// Stable machine-readable name, e.g. "tag-mismatch".
const char* error_code(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }
    const char* code() const noexcept { return error_code(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace conway
