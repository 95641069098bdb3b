#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ucg {

/// Malformed table input: wrong dimensions, out-of-range indices.
/// Distinct from an axiom violation, which validate() reports as data.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A size guard (vertex cap, brute-force cap, solver cap) was exceeded.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructor was called on input that does not satisfy the hypotheses
/// the construction relies on.
class HypothesisViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid builtin spec or builtin parameter.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace ucg
