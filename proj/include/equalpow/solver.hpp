#pragma once

#include <optional>
#include <vector>

#include "equalpow/quadruple.hpp"

namespace equalpow {

/// One (small, large = small + r) pair with large^n - small^n = delta.
struct DivisorWitness {
    int n;
    Int delta;
    Int r;
    Branch branch;  // meaningful for n == 3 only
    Int small;      // C for the first pair of an identity, B for the second
    Int large;      // small + r
};

struct AdmissibleDivisor {
    Int r;
    Branch branch;
};

/// Divisors r of delta whose parametrized pair is integral. For n=2 the test
/// is (delta - r^2) mod 2r == 0; for n=3 the radicand 12*delta*r - 3r^4 must
/// be a nonnegative perfect square t^2 with (-3r^2 +- t) divisible by 6r.
/// positive_only additionally requires small > 0 (equivalently r^n < delta).
std::vector<AdmissibleDivisor> admissible_divisors(int n, const Int& delta,
                                                   bool positive_only);

/// small = (delta - r^2)/(2r), large = (delta + r^2)/(2r).
/// Throws inadmissible_divisor when the divisibility preconditions fail.
DivisorWitness solve_pair2(const Int& delta, const Int& r);

/// Quadratic-in-C solve: small = (-3r^2 +- t)/(6r) with t^2 = 12*delta*r - 3r^4.
/// Empty when the radicand is negative, not a perfect square, or the division
/// is inexact. Throws inadmissible_divisor when r does not divide delta.
std::optional<DivisorWitness> solve_pair3(const Int& delta, const Int& r, Branch branch);

struct EnumerateOptions {
    bool positive_only = true;
    // n=3 only: additionally assemble minus-branch pairs (components and sum
    // carry their exact signs).
    bool include_negative_branch = false;
};

/// All identities from unordered pairs of distinct admissible divisors
/// (same branch for n=3): A = large(r1), C = small(r1), D = large(r2),
/// B = small(r2), with r1 < r2. Each result is re-verified exactly and
/// deduplicated by (sum, unordered pair-of-pairs).
std::vector<Quadruple> enumerate_identities(int n, const Int& delta,
                                            const EnumerateOptions& opts = {});

}  // namespace equalpow
