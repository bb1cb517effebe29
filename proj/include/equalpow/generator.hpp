#pragma once

#include <cstdint>
#include <vector>

#include "equalpow/quadint.hpp"
#include "equalpow/quadruple.hpp"

namespace equalpow {
namespace gen {

// Closed-form constants: C = (-6 + s_C)/4 and B = (-18 + s_B)/4 where s_X is
// the conjugate pair sum coeff*base^c1 + conj, base = 7+4*sqrt(3) (norm-1 unit,
// root of t^2 - 14t + 1), coeffC = 15+7*sqrt(3), coeffB = 7+5*sqrt(3).
// Then A = C + 3 and D = B + 9.
struct Constants {
    QuadInt base{7, 4};
    QuadInt coeff_c{15, 7};
    QuadInt coeff_b{7, 5};
    int offset_c = -6;
    int offset_b = -18;
    int denom = 4;
    int shift_a = 3;
    int shift_d = 9;
};

inline const Constants& constants() {
    static const Constants k;
    return k;
}

Int gen_C(std::uint64_t c1);
Int gen_B(std::uint64_t c1);

/// Builds (A, B, C, D) at parameter c1 and verifies A^3+B^3 == C^3+D^3
/// exactly before returning.
Quadruple gen_quadruple(std::uint64_t c1);

enum class SeqKind : std::uint8_t { C, B };

/// Next term from the order-2 recurrence x_{k+1} = 14 x_k - x_{k-1} + const
/// (characteristic roots 7 +- 4*sqrt(3)); const is 18 for C, 54 for B.
Int recurrence_step(const Int& prev, const Int& curr, SeqKind kind);

/// A(c1)^3 - C(c1)^3; cross-checked against D^3 - B^3 and 9C^2 + 27C + 27.
Int delta_of(std::uint64_t c1);

/// A(c)^3 + B(c)^3 for c in [c1_from, c1_to] (OEIS A384106 for c >= 1).
std::vector<Int> sum_sequence(std::uint64_t c1_from, std::uint64_t c1_to);

/// Digit-growth model digits(A(c1)) ~ intercept + slope*c1 with
/// slope = log10(7+4*sqrt(3)), intercept = log10((15+7*sqrt(3))/4),
/// computed from the exact constants at startup.
struct GrowthModel {
    double slope;
    double intercept;

    static GrowthModel compute();
    double predicted_digits(std::uint64_t c1) const {
        return intercept + slope * static_cast<double>(c1);
    }
};

double predicted_digits(std::uint64_t c1);

}  // namespace gen
}  // namespace equalpow
