#include "equalpow/generator.hpp"

#include <cmath>

namespace equalpow {
namespace gen {

namespace {

Int closed_form(const QuadInt& coeff, int offset, std::uint64_t c1) {
    const Constants& k = constants();
    const Int numer = offset + conjugate_pair_value(coeff, k.base, c1);
    if (numer % k.denom != 0)
        throw consistency_error("generator: conjugate sum numerator not divisible by 4");
    return numer / k.denom;
}

Int cube(const Int& x) { return x * x * x; }

}  // namespace

Int gen_C(std::uint64_t c1) {
    const Constants& k = constants();
    return closed_form(k.coeff_c, k.offset_c, c1);
}

Int gen_B(std::uint64_t c1) {
    const Constants& k = constants();
    return closed_form(k.coeff_b, k.offset_b, c1);
}

Quadruple gen_quadruple(std::uint64_t c1) {
    const Constants& k = constants();
    Quadruple q;
    q.n = 3;
    q.C = gen_C(c1);
    q.A = q.C + k.shift_a;
    q.B = gen_B(c1);
    q.D = q.B + k.shift_d;
    q.sum = cube(q.A) + cube(q.B);
    q.provenance = Provenance::from_generator(c1);
    q.degenerate = false;
    if (!holds_exactly(q))
        throw consistency_error("gen_quadruple: identity check failed");
    return q;
}

Int recurrence_step(const Int& prev, const Int& curr, SeqKind kind) {
    return 14 * curr - prev + (kind == SeqKind::C ? 18 : 54);
}

Int delta_of(std::uint64_t c1) {
    const Int c = gen_C(c1);
    const Int b = gen_B(c1);
    const Constants& k = constants();
    const Int delta = cube(c + k.shift_a) - cube(c);
    if (delta != cube(b + k.shift_d) - cube(b))
        throw consistency_error("delta_of: D^3 - B^3 mismatch");
    if (delta != 9 * c * c + 27 * c + 27)
        throw consistency_error("delta_of: quadratic form mismatch");
    return delta;
}

std::vector<Int> sum_sequence(std::uint64_t c1_from, std::uint64_t c1_to) {
    std::vector<Int> out;
    for (std::uint64_t c = c1_from; c <= c1_to; ++c)
        out.push_back(gen_quadruple(c).sum);
    return out;
}

GrowthModel GrowthModel::compute() {
    const Constants& k = constants();
    const double sqrt3 = std::sqrt(3.0);
    const double beta = mpz_get_d(k.base.a.get_mpz_t()) +
                        mpz_get_d(k.base.b.get_mpz_t()) * sqrt3;
    const double lead = (mpz_get_d(k.coeff_c.a.get_mpz_t()) +
                         mpz_get_d(k.coeff_c.b.get_mpz_t()) * sqrt3) /
                        static_cast<double>(k.denom);
    return {std::log10(beta), std::log10(lead)};
}

double predicted_digits(std::uint64_t c1) {
    static const GrowthModel model = GrowthModel::compute();
    return model.predicted_digits(c1);
}

}  // namespace gen
}  // namespace equalpow
