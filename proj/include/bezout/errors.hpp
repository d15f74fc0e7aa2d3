#pragma once

#include <stdexcept>
#include <string>

namespace bezout {

// Precondition violations and failed exact operations.
// The CLI maps these to exit code 1; usage problems exit with 2.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact division hit a nonzero remainder; the message carries the remainder.
class DivisionError : public DomainError {
public:
    explicit DivisionError(const std::string& msg) : DomainError(msg) {}
};

// Rejected input text (form expressions, covariant patterns, rationals).
class ParseError : public DomainError {
public:
    explicit ParseError(const std::string& msg) : DomainError(msg) {}
};

// Undetermined-coefficients engine: the specialization matrix has trivial nullspace.
class NoRelationError : public DomainError {
public:
    explicit NoRelationError(const std::string& msg) : DomainError(msg) {}
};

// Undetermined-coefficients engine: nullspace dimension > 1, more specializations needed.
class AmbiguousRelationError : public DomainError {
public:
    explicit AmbiguousRelationError(const std::string& msg) : DomainError(msg) {}
};

} // namespace bezout
