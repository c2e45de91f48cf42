#pragma once

#include <stdexcept>
#include <string>

namespace qtri {

/// Malformed or out-of-domain input (non-skew matrix, bad index, wrong length).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// B is skew-symmetric but some vertex both emits and receives arrows.
class NotBipartiteError : public DomainError {
public:
    NotBipartiteError(int vertex, const std::string& what)
        : DomainError(what), vertex_(vertex) {}
    /// 1-based index of the offending vertex.
    int vertex() const { return vertex_; }

private:
    int vertex_;
};

/// An internal algebraic invariant failed (broken triangularity, non-terminating
/// reduction, inconsistent normalization). Signals a bug or an input outside the
/// supported span, never a user error.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace qtri
