#pragma once

#include <stdexcept>
#include <string>

namespace kemeny {

/// Failure categories used across the library. Preconditions map to a kind so
/// callers can react without string matching.
enum class ErrorKind {
    SelfLoop,
    DuplicateEdge,
    VertexOutOfRange,
    IsolatedVertex,
    Disconnected,
    Trivial,
    EdgeAlreadyPresent,
    NotSquare,
    NotSymmetric,
    Singular,
    TooLarge,
    CriterionMismatch,
    InvalidEntry,
    AttemptsExhausted,
    PatternTooLarge,
    PatternNotSmaller,
    ParseError,
    InvalidArgument,
};

inline const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::IsolatedVertex: return "IsolatedVertex";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::Trivial: return "Trivial";
        case ErrorKind::EdgeAlreadyPresent: return "EdgeAlreadyPresent";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::CriterionMismatch: return "CriterionMismatch";
        case ErrorKind::InvalidEntry: return "InvalidEntry";
        case ErrorKind::AttemptsExhausted: return "AttemptsExhausted";
        case ErrorKind::PatternTooLarge: return "PatternTooLarge";
        case ErrorKind::PatternNotSmaller: return "PatternNotSmaller";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace kemeny
