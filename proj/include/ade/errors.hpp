#pragma once

// Error taxonomy. Callers that need to distinguish outcomes catch the
// specific type; the CLI maps these onto process exit codes.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ade {

// Malformed textual input (polynomial expressions, corpus lines).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

// Precondition violation on otherwise well-formed input (wrong variable
// count, vector is not a root, non-symmetric form, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// The ideal is not zero-dimensional: its quotient algebra is infinite
// dimensional and has no finite monomial basis.
class NotZeroDimensionalError : public std::runtime_error {
public:
    explicit NotZeroDimensionalError(const std::string& msg) : std::runtime_error(msg) {}
};

// The Jacobian ideal is not zero-dimensional: the germ has a non-isolated
// critical locus and its local algebra is infinite dimensional.
class NonIsolatedError : public std::runtime_error {
public:
    explicit NonIsolatedError(const std::string& msg) : std::runtime_error(msg) {}
};

// A classification step failed for a structural reason (no weight system,
// spectrum too long, corank too large, no table match). `reason` carries a
// stable machine-readable tag next to the human message.
class ClassifyError : public std::runtime_error {
public:
    ClassifyError(std::string tag, const std::string& msg)
        : std::runtime_error(msg), reason(std::move(tag)) {}
    std::string reason;
};

// A decision procedure ran out of budget without reaching a verdict.
class UndecidedError : public std::runtime_error {
public:
    explicit UndecidedError(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration exceeded its caller-supplied element limit.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ade
