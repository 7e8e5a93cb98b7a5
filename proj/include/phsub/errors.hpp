#pragma once

#include <stdexcept>
#include <string>

namespace phsub {

// Mismatched scalar-product contexts, dimensions, or algebra kinds.
class ContextError : public std::invalid_argument {
public:
    explicit ContextError(const std::string& what) : std::invalid_argument(what) {}
};

// A pivot norm fell below tolerance while orthonormalizing; the message
// names the offending step.
class DegenerateSubspaceError : public std::runtime_error {
public:
    explicit DegenerateSubspaceError(const std::string& what) : std::runtime_error(what) {}
};

// An eigenvalue cluster straddles the kernel tolerance, so the kernel
// dimension is not well determined at the requested tolerance.
class ToleranceAmbiguityError : public std::runtime_error {
public:
    explicit ToleranceAmbiguityError(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the operation's geometric domain (point off the quadric,
// non-tangent vector, null direction, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Inconsistent model configuration (unsupported check/model pairing,
// structure list of the wrong length, out-of-range signature, ...).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace phsub
