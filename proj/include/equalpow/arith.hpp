#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "equalpow/errors.hpp"

namespace equalpow {

using Int = mpz_class;

/// floor(sqrt(x)) for x >= 0, by Newton iteration seeded from the bit length.
/// Throws std::domain_error for negative input.
Int isqrt(const Int& x);

/// The exact square root when x is a perfect square, otherwise empty.
/// Negative input yields empty.
std::optional<Int> perfect_square(const Int& x);

struct DivisorList {
    Int delta;
    std::vector<Int> divisors;  // strictly ascending, complete
};

// Trial division is O(sqrt(delta)); anything wider than this must come with
// a caller-supplied divisor list.
inline constexpr int kDivisorBitBound = 127;

/// Complete ascending divisor list of delta via trial division.
/// Throws std::domain_error for delta <= 0, capacity_error past the bit bound.
DivisorList divisors(const Int& delta);

/// Number of decimal digits of |x| (1 for zero).
int digit_count(const Int& x);

}  // namespace equalpow
