#include "equalpow/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <istream>
#include <ostream>

namespace equalpow {
namespace oracle {

namespace {

constexpr char kMagic[8] = {'E', 'Q', 'P', 'W', 'I', 'D', 'X', '1'};
constexpr std::uint16_t kFlagPositiveOnly = 1u << 0;
constexpr std::uint16_t kFlagSigned = 1u << 1;

Int pow_n(const Int& x, int n) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n));
    return p;
}

void put_u16(std::ostream& out, std::uint16_t v) {
    const char bytes[2] = {static_cast<char>(v & 0xff), static_cast<char>(v >> 8)};
    out.write(bytes, 2);
}

void put_u32(std::ostream& out, std::uint32_t v) {
    char bytes[4];
    for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(bytes, 4);
}

std::uint16_t get_u16(std::istream& in) {
    unsigned char bytes[2];
    in.read(reinterpret_cast<char*>(bytes), 2);
    return static_cast<std::uint16_t>(bytes[0] | (bytes[1] << 8));
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char bytes[4];
    in.read(reinterpret_cast<char*>(bytes), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes[i]) << (8 * i);
    return v;
}

void put_string(std::ostream& out, const std::string& s) {
    put_u32(out, static_cast<std::uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string get_string(std::istream& in) {
    const std::uint32_t len = get_u32(in);
    std::string s(len, '\0');
    in.read(s.data(), static_cast<std::streamsize>(len));
    return s;
}

}  // namespace

SumIndex build_index(int n, std::int64_t limit, const IndexOptions& opts) {
    if (n != 2 && n != 3) throw std::domain_error("build_index: exponent must be 2 or 3");
    if (limit < 1) throw std::domain_error("build_index: limit must be >= 1");

    const std::int64_t lo = opts.signed_components ? -limit : (opts.positive_only ? 1 : 0);
    const std::uint64_t m = static_cast<std::uint64_t>(limit - lo + 1);
    if (m * (m + 1) / 2 > opts.pair_budget)
        throw capacity_error("build_index: pair count exceeds budget");

    SumIndex index{n, limit, opts, {}};
    for (std::int64_t x = lo; x <= limit; ++x) {
        const Int xn = pow_n(Int(static_cast<long>(x)), n);
        for (std::int64_t y = x; y <= limit; ++y) {
            Int sum = xn + pow_n(Int(static_cast<long>(y)), n);
            index.table[std::move(sum)].emplace_back(Int(static_cast<long>(x)),
                                                     Int(static_cast<long>(y)));
        }
    }
    return index;
}

std::vector<std::pair<Int, std::vector<std::pair<Int, Int>>>> multi_representations(
    const SumIndex& index, std::size_t min_ways) {
    std::vector<std::pair<Int, std::vector<std::pair<Int, Int>>>> out;
    for (const auto& [sum, pairs] : index.table)
        if (pairs.size() >= min_ways) out.emplace_back(sum, pairs);
    return out;
}

Verdict verify_quadruple(int n, const Int& A, const Int& B, const Int& C, const Int& D) {
    if (pow_n(A, n) + pow_n(B, n) != pow_n(C, n) + pow_n(D, n)) return Verdict::invalid;
    return std::minmax(A, B) == std::minmax(C, D) ? Verdict::valid_trivial
                                                  : Verdict::valid_nontrivial;
}

bool contains_pair(const SumIndex& index, const Int& x, const Int& y) {
    const auto [lo, hi] = std::minmax(x, y);
    const Int sum = pow_n(lo, index.n) + pow_n(hi, index.n);
    const auto it = index.table.find(sum);
    if (it == index.table.end()) return false;
    return std::find(it->second.begin(), it->second.end(), std::make_pair(lo, hi)) !=
           it->second.end();
}

void save_index(const SumIndex& index, std::ostream& out) {
    out.write(kMagic, sizeof(kMagic));
    put_u16(out, static_cast<std::uint16_t>(index.n));
    put_u32(out, static_cast<std::uint32_t>(index.limit));
    std::uint16_t flags = 0;
    if (index.options.positive_only) flags |= kFlagPositiveOnly;
    if (index.options.signed_components) flags |= kFlagSigned;
    put_u16(out, flags);

    for (const auto& [sum, pairs] : index.table) {
        put_string(out, sum.get_str());
        put_u32(out, static_cast<std::uint32_t>(pairs.size()));
        for (const auto& [x, y] : pairs) {
            put_string(out, x.get_str());
            put_string(out, y.get_str());
        }
    }
}

SumIndex load_index(std::istream& in) {
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("load_index: bad magic");
    SumIndex index;
    index.n = get_u16(in);
    index.limit = get_u32(in);
    const std::uint16_t flags = get_u16(in);
    index.options.positive_only = (flags & kFlagPositiveOnly) != 0;
    index.options.signed_components = (flags & kFlagSigned) != 0;
    if (!in || (index.n != 2 && index.n != 3))
        throw std::runtime_error("load_index: bad header");

    while (in.peek() != std::istream::traits_type::eof()) {
        Int sum(get_string(in));
        const std::uint32_t count = get_u32(in);
        auto& pairs = index.table[sum];
        for (std::uint32_t i = 0; i < count; ++i) {
            Int x(get_string(in));
            Int y(get_string(in));
            pairs.emplace_back(std::move(x), std::move(y));
        }
        if (!in) throw std::runtime_error("load_index: truncated record");
    }
    return index;
}

}  // namespace oracle
}  // namespace equalpow
