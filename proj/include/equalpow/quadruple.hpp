#pragma once

#include <cstdint>
#include <string>

#include "equalpow/arith.hpp"

namespace equalpow {

enum class Branch : std::uint8_t { plus, minus };

inline const char* branch_name(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

struct Provenance {
    enum class Kind : std::uint8_t { divisor, generator, oracle } kind;
    // divisor route
    Int delta;
    Int r1, r2;
    Branch branch = Branch::plus;
    // generator route
    std::uint64_t c1 = 0;

    static Provenance from_divisors(Int delta, Int r1, Int r2, Branch br);
    static Provenance from_generator(std::uint64_t c1);
    static Provenance from_oracle();

    std::string describe() const;
};

/// One verified solution record for A^n + B^n = C^n + D^n.
struct Quadruple {
    int n;  // 2 or 3
    Int A, B, C, D;
    Int sum;
    Provenance provenance;
    bool degenerate = false;  // {A,B} == {C,D} as unordered pairs
};

/// Exact recheck of A^n + B^n == C^n + D^n by independent exponentiation.
bool holds_exactly(const Quadruple& q);

}  // namespace equalpow
