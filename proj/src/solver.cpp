#include "equalpow/solver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace equalpow {

namespace {

Int pow_n(const Int& x, int n) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n));
    return p;
}

void check_exponent(int n) {
    if (n != 2 && n != 3) throw std::domain_error("exponent must be 2 or 3");
}

// Integral small value for (n=3, r, branch), or empty. Assumes r | delta.
std::optional<Int> small3(const Int& delta, const Int& r, Branch branch) {
    const Int rad = 12 * delta * r - 3 * r * r * r * r;
    if (rad < 0) return std::nullopt;
    const auto t = perfect_square(rad);
    if (!t) return std::nullopt;
    const Int num = -3 * r * r + (branch == Branch::plus ? *t : -*t);
    const Int denom = 6 * r;
    if (num % denom != 0) return std::nullopt;
    return Int(num / denom);
}

}  // namespace

std::vector<AdmissibleDivisor> admissible_divisors(int n, const Int& delta,
                                                   bool positive_only) {
    check_exponent(n);
    if (delta <= 0) throw std::domain_error("admissible_divisors: delta must be positive");

    std::vector<AdmissibleDivisor> out;
    for (const Int& r : divisors(delta).divisors) {
        if (n == 2) {
            const Int num = delta - r * r;
            if (num % (2 * r) != 0) continue;
            if (positive_only && num <= 0) continue;
            out.push_back({r, Branch::plus});
        } else {
            for (Branch br : {Branch::plus, Branch::minus}) {
                const auto small = small3(delta, r, br);
                if (!small) continue;
                if (positive_only && *small <= 0) continue;
                out.push_back({r, br});
            }
        }
    }
    return out;
}

DivisorWitness solve_pair2(const Int& delta, const Int& r) {
    if (delta <= 0 || r <= 0 || delta % r != 0)
        throw inadmissible_divisor("solve_pair2: r must be a positive divisor of delta");
    const Int num = delta - r * r;
    if (num % (2 * r) != 0)
        throw inadmissible_divisor("solve_pair2: (delta - r^2) not divisible by 2r");
    DivisorWitness w{2, delta, r, Branch::plus, num / (2 * r), (delta + r * r) / (2 * r)};
    if (w.large * w.large - w.small * w.small != delta)
        throw consistency_error("solve_pair2: difference invariant failed");
    return w;
}

std::optional<DivisorWitness> solve_pair3(const Int& delta, const Int& r, Branch branch) {
    if (delta <= 0 || r <= 0 || delta % r != 0)
        throw inadmissible_divisor("solve_pair3: r must be a positive divisor of delta");
    const auto small = small3(delta, r, branch);
    if (!small) return std::nullopt;
    DivisorWitness w{3, delta, r, branch, *small, *small + r};
    if (w.large * w.large * w.large - w.small * w.small * w.small != delta)
        throw consistency_error("solve_pair3: difference invariant failed");
    return w;
}

std::vector<Quadruple> enumerate_identities(int n, const Int& delta,
                                            const EnumerateOptions& opts) {
    check_exponent(n);
    auto admissible = admissible_divisors(n, delta, opts.positive_only);
    if (n == 3 && opts.include_negative_branch && opts.positive_only) {
        for (const auto& ad : admissible_divisors(3, delta, false))
            if (ad.branch == Branch::minus) admissible.push_back(ad);
    }

    auto witness = [&](const AdmissibleDivisor& ad) -> DivisorWitness {
        if (n == 2) return solve_pair2(delta, ad.r);
        return *solve_pair3(delta, ad.r, ad.branch);
    };

    std::vector<Quadruple> out;
    std::set<std::string> seen;
    for (Branch br : {Branch::plus, Branch::minus}) {
        std::vector<AdmissibleDivisor> group;
        for (const auto& ad : admissible)
            if (ad.branch == br) group.push_back(ad);
        std::sort(group.begin(), group.end(),
                  [](const auto& a, const auto& b) { return a.r < b.r; });

        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                const DivisorWitness w1 = witness(group[i]);
                const DivisorWitness w2 = witness(group[j]);
                Quadruple q;
                q.n = n;
                q.A = w1.large;
                q.C = w1.small;
                q.B = w2.small;
                q.D = w2.large;
                q.sum = pow_n(q.A, n) + pow_n(q.B, n);
                q.provenance = Provenance::from_divisors(delta, w1.r, w2.r, br);
                q.degenerate = std::minmax(q.A, q.B) == std::minmax(q.C, q.D);
                if (!holds_exactly(q))
                    throw consistency_error("enumerate_identities: identity recheck failed");
                if (q.degenerate) continue;

                std::ostringstream key;
                std::pair<Int, Int> lhs = std::minmax(q.A, q.B);
                std::pair<Int, Int> rhs = std::minmax(q.C, q.D);
                if (rhs < lhs) std::swap(lhs, rhs);
                key << q.sum << '|' << lhs.first << ',' << lhs.second << '|'
                    << rhs.first << ',' << rhs.second;
                if (!seen.insert(key.str()).second) continue;
                out.push_back(std::move(q));
            }
        }
    }
    return out;
}

}  // namespace equalpow
