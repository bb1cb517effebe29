#pragma once

#include <cstdint>

#include "equalpow/arith.hpp"

namespace equalpow {

/// Element a + b*sqrt(3) of Z[sqrt(3)]. The only quadratic ring used here;
/// the generator constants 7+4*sqrt(3), 15+7*sqrt(3), 7+5*sqrt(3) live in it.
struct QuadInt {
    Int a;  // rational part
    Int b;  // coefficient of sqrt(3)

    friend bool operator==(const QuadInt&, const QuadInt&) = default;
};

QuadInt operator+(const QuadInt& x, const QuadInt& y);
QuadInt operator*(const QuadInt& x, const QuadInt& y);

inline QuadInt conj(const QuadInt& x) { return {x.a, -x.b}; }

/// x^e by binary exponentiation; quad_pow(x, 0) = (1, 0).
QuadInt quad_pow(const QuadInt& base, std::uint64_t e);

/// coeff*base^e + conj(coeff)*conj(base)^e. The sqrt(3)-coefficient of the
/// sum must cancel exactly; returns the rational part.
/// Throws consistency_error if cancellation fails (unreachable by symmetry).
Int conjugate_pair_value(const QuadInt& coeff_plus, const QuadInt& base_plus,
                         std::uint64_t e);

}  // namespace equalpow
