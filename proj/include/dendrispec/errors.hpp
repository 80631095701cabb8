#pragma once

#include <stdexcept>
#include <string>

namespace dendrispec {

// Malformed input: empty tuples, non-positive entries, non-symmetric matrices.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Well-formed input outside the mathematical domain of an operation
// (k < 2 for a dendrimer, beta not dividing alpha, l < 2 for the asymptotic bounds, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A size guard was hit (adjacency materialization, exact expansion, oracle caps).
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A guaranteed mathematical property failed to hold; always an implementation bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dendrispec
