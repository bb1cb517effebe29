#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equalpow/quadint.hpp"

using namespace equalpow;

namespace {

// Independent power: plain repeated multiplication.
QuadInt slow_pow(const QuadInt& x, std::uint64_t e) {
    QuadInt r{1, 0};
    for (std::uint64_t i = 0; i < e; ++i) r = r * x;
    return r;
}

}  // namespace

TEST_CASE("ring multiplication") {
    QuadInt x{7, 4}, y{15, 7};
    QuadInt p = x * y;
    CHECK(p.a == 7 * 15 + 3 * 4 * 7);
    CHECK(p.b == 7 * 7 + 4 * 15);

    // x * conj(x) has zero sqrt(3) part; 7+4*sqrt(3) is a norm-1 unit
    QuadInt norm = x * conj(x);
    CHECK(norm == QuadInt{1, 0});
}

TEST_CASE("quad_pow worked values") {
    CHECK(quad_pow({7, 4}, 1) == QuadInt{7, 4});
    CHECK(quad_pow({7, 4}, 2) == QuadInt{97, 56});
    CHECK(quad_pow({7, -4}, 0) == QuadInt{1, 0});
}

TEST_CASE("quad_pow homomorphism and agreement with repeated multiplication") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(777);
    for (int i = 0; i < 50; ++i) {
        QuadInt x{rng.get_z_range(Int(2000)) - 1000, rng.get_z_range(Int(2000)) - 1000};
        const std::uint64_t m = i % 7, n = (i * 3) % 9;
        CHECK(quad_pow(x, m + n) == quad_pow(x, m) * quad_pow(x, n));
        CHECK(quad_pow(x, n) == slow_pow(x, n));
    }
}

TEST_CASE("conjugate_pair_value worked values") {
    CHECK(conjugate_pair_value({15, 7}, {7, 4}, 0) == 30);
    // (15+7sqrt3)(7+4sqrt3) = 189 + 109 sqrt3
    CHECK(conjugate_pair_value({15, 7}, {7, 4}, 1) == 378);
    // (7+5sqrt3)(7+4sqrt3) = 109 + 63 sqrt3
    CHECK(conjugate_pair_value({7, 5}, {7, 4}, 1) == 218);
}

TEST_CASE("conjugate cancellation never fires, value matches 2x rational part") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(4242);
    for (int i = 0; i < 40; ++i) {
        QuadInt coeff{rng.get_z_range(Int(200)) - 100, rng.get_z_range(Int(200)) - 100};
        QuadInt base{rng.get_z_range(Int(40)) - 20, rng.get_z_range(Int(40)) - 20};
        const std::uint64_t e = i % 65;
        Int value;
        CHECK_NOTHROW(value = conjugate_pair_value(coeff, base, e));
        // independent route: the sum is twice the rational part of the product
        QuadInt product = coeff * slow_pow(base, e);
        CHECK(value == 2 * product.a);
    }
}
