#include "equalpow/quadruple.hpp"

#include <sstream>

namespace equalpow {

Provenance Provenance::from_divisors(Int delta, Int r1, Int r2, Branch br) {
    Provenance p;
    p.kind = Kind::divisor;
    p.delta = std::move(delta);
    p.r1 = std::move(r1);
    p.r2 = std::move(r2);
    p.branch = br;
    return p;
}

Provenance Provenance::from_generator(std::uint64_t c1) {
    Provenance p;
    p.kind = Kind::generator;
    p.c1 = c1;
    return p;
}

Provenance Provenance::from_oracle() {
    Provenance p;
    p.kind = Kind::oracle;
    return p;
}

std::string Provenance::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::divisor:
            os << "divisor(delta=" << delta << ",r1=" << r1 << ",r2=" << r2
               << ",branch=" << branch_name(branch) << ")";
            break;
        case Kind::generator:
            os << "generator(c1=" << c1 << ")";
            break;
        case Kind::oracle:
            os << "oracle";
            break;
    }
    return os.str();
}

static Int pow_n(const Int& x, int n) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n));
    return p;
}

bool holds_exactly(const Quadruple& q) {
    const Int lhs = pow_n(q.A, q.n) + pow_n(q.B, q.n);
    const Int rhs = pow_n(q.C, q.n) + pow_n(q.D, q.n);
    return lhs == rhs && lhs == q.sum;
}

}  // namespace equalpow
