#pragma once

#include <stdexcept>
#include <string>

namespace eisen {

/// Invalid caller-supplied parameters (not an odd prime, n < 1, reducible f, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (dimension, subset count, resultant size) would be exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact division requested but the divisor does not divide.
class InexactDivision : public std::domain_error {
public:
    InexactDivision() : std::domain_error("inexact division") {}
    explicit InexactDivision(const std::string& what) : std::domain_error("inexact division: " + what) {}
};

/// A valuation was requested for zero.
class InfiniteValuation : public std::domain_error {
public:
    InfiniteValuation() : std::domain_error("infinite valuation (element is zero)") {}
};

/// Linear system has no solution.
class InconsistentSystem : public std::runtime_error {
public:
    InconsistentSystem() : std::runtime_error("inconsistent") {}
};

/// Linear system has more than one solution.
class UnderdeterminedSystem : public std::runtime_error {
public:
    UnderdeterminedSystem() : std::runtime_error("underdetermined") {}
};

/// An identity that must hold by construction failed; indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace eisen
