#pragma once

#include <stdexcept>
#include <string>

namespace lkss {

/// Base for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Parameter outside its documented range (thresholds, alpha, modulus, ...).
struct InvalidParamsError : Error {
    explicit InvalidParamsError(const std::string& what) : Error(what) {}
};

/// Arithmetic between elements of different prime fields.
struct FieldMismatchError : Error {
    explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

/// Fewer shares than the reconstruction threshold needs.
struct InsufficientSharesError : Error {
    explicit InsufficientSharesError(const std::string& what) : Error(what) {}
};

/// Malformed or inconsistent share file (bad magic, truncated payload, mixed ids).
struct ShareFormatError : Error {
    explicit ShareFormatError(const std::string& what) : Error(what) {}
};

/// A bounded randomness stream ran dry mid-encode.
struct RandomnessExhaustedError : Error {
    explicit RandomnessExhaustedError(const std::string& what) : Error(what) {}
};

/// Exhaustive enumeration would exceed its state budget.
struct StateSpaceError : Error {
    explicit StateSpaceError(const std::string& what) : Error(what) {}
};

}  // namespace lkss
