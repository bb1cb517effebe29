#include "equalpow/arith.hpp"

#include <algorithm>

namespace equalpow {

Int isqrt(const Int& x) {
    if (x < 0) throw std::domain_error("isqrt: negative input");
    if (x < 2) return x;
    // Seed above the true root: 2^ceil(bits/2) >= sqrt(x). Newton then
    // decreases monotonically to floor(sqrt(x)).
    const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
    Int guess = Int(1) << ((bits + 1) / 2);
    for (;;) {
        Int next = (guess + x / guess) / 2;
        if (next >= guess) return guess;
        guess = std::move(next);
    }
}

std::optional<Int> perfect_square(const Int& x) {
    if (x < 0) return std::nullopt;
    Int root = isqrt(x);
    if (root * root == x) return root;
    return std::nullopt;
}

DivisorList divisors(const Int& delta) {
    if (delta <= 0) throw std::domain_error("divisors: delta must be positive");
    if (mpz_sizeinbase(delta.get_mpz_t(), 2) > kDivisorBitBound)
        throw capacity_error("divisors: delta exceeds the trial-division bound");

    std::vector<Int> low, high;
    const Int root = isqrt(delta);
    for (Int d = 1; d <= root; ++d) {
        if (delta % d == 0) {
            low.push_back(d);
            Int q = delta / d;
            if (q != d) high.push_back(q);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return DivisorList{delta, std::move(low)};
}

int digit_count(const Int& x) {
    if (x == 0) return 1;
    Int mag = abs(x);
    // sizeinbase may overestimate by one digit
    int digits = static_cast<int>(mpz_sizeinbase(mag.get_mpz_t(), 10));
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits - 1));
    if (mag < pow10) --digits;
    return digits;
}

}  // namespace equalpow
