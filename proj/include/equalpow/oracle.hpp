#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "equalpow/quadruple.hpp"

namespace equalpow {
namespace oracle {

inline constexpr std::uint64_t kDefaultPairBudget = 1'000'000;

struct IndexOptions {
    bool positive_only = true;       // components start at 1 instead of 0
    bool signed_components = false;  // x, y range over [-limit, limit] (n=3)
    std::uint64_t pair_budget = kDefaultPairBudget;
};

/// Brute-force ground truth: every sum x^n + y^n with x <= y in range, keyed
/// by sum. Meet-in-the-middle over O(N^2) unordered pairs.
struct SumIndex {
    int n;
    std::int64_t limit;
    IndexOptions options;
    std::map<Int, std::vector<std::pair<Int, Int>>> table;  // pairs sorted, x <= y
};

/// Throws capacity_error when the pair count would exceed the budget.
SumIndex build_index(int n, std::int64_t limit, const IndexOptions& opts = {});

/// Entries with at least min_ways distinct unordered pairs, ascending by sum.
std::vector<std::pair<Int, std::vector<std::pair<Int, Int>>>> multi_representations(
    const SumIndex& index, std::size_t min_ways);

enum class Verdict : std::uint8_t { valid_nontrivial, valid_trivial, invalid };

Verdict verify_quadruple(int n, const Int& A, const Int& B, const Int& C, const Int& D);

/// Does the index contain {x, y} among the pairs for their sum?
bool contains_pair(const SumIndex& index, const Int& x, const Int& y);

// Persisted form: 16-byte header {magic "EQPWIDX1", u16 n, u32 limit,
// u16 flags}, then per-sum records of length-prefixed decimal strings,
// everything little-endian.
void save_index(const SumIndex& index, std::ostream& out);
SumIndex load_index(std::istream& in);  // throws std::runtime_error on bad header

}  // namespace oracle
}  // namespace equalpow
