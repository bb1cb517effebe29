#include "equalpow/quadint.hpp"

namespace equalpow {

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
    return {x.a + y.a, x.b + y.b};
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadInt quad_pow(const QuadInt& base, std::uint64_t e) {
    QuadInt result{1, 0};
    QuadInt sq = base;
    while (e != 0) {
        if (e & 1) result = result * sq;
        sq = sq * sq;
        e >>= 1;
    }
    return result;
}

Int conjugate_pair_value(const QuadInt& coeff_plus, const QuadInt& base_plus,
                         std::uint64_t e) {
    const QuadInt plus = coeff_plus * quad_pow(base_plus, e);
    const QuadInt minus = conj(coeff_plus) * quad_pow(conj(base_plus), e);
    const QuadInt sum = plus + minus;
    if (sum.b != 0)
        throw consistency_error("conjugate_pair_value: sqrt(3) part did not cancel");
    return sum.a;
}

}  // namespace equalpow
