#pragma once

#include <stdexcept>
#include <string>

namespace equalpow {

// Input outside the configured enumeration/memory bound.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A divisor that fails the exact divisibility preconditions of a solver.
struct inadmissible_divisor : std::invalid_argument {
    explicit inadmissible_divisor(const std::string& msg) : std::invalid_argument(msg) {}
};

// An internal algebraic invariant failed (conjugate cancellation, exact
// division, identity self-check). Must be unreachable for valid constants.
struct consistency_error : std::logic_error {
    explicit consistency_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace equalpow
