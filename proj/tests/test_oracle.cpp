#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "equalpow/oracle.hpp"

using namespace equalpow;
using namespace equalpow::oracle;

TEST_CASE("build_index worked examples") {
    auto idx = build_index(3, 13);
    auto hits = multi_representations(idx, 2);
    REQUIRE(!hits.empty());
    CHECK(hits.front().first == 1729);
    REQUIRE(hits.front().second.size() == 2);
    CHECK(hits.front().second[0] == std::make_pair(Int(1), Int(12)));
    CHECK(hits.front().second[1] == std::make_pair(Int(9), Int(10)));

    auto idx2 = build_index(2, 8);
    auto it = idx2.table.find(Int(50));
    REQUIRE(it != idx2.table.end());
    REQUIRE(it->second.size() == 2);
    CHECK(it->second[0] == std::make_pair(Int(1), Int(7)));
    CHECK(it->second[1] == std::make_pair(Int(5), Int(5)));

    auto tiny = build_index(3, 1);
    REQUIRE(tiny.table.size() == 1);
    CHECK(tiny.table.begin()->first == 2);
    CHECK(tiny.table.begin()->second == std::vector<std::pair<Int, Int>>{{Int(1), Int(1)}});
}

TEST_CASE("multi_representations small cases") {
    CHECK(multi_representations(build_index(3, 5), 2).empty());
    CHECK(multi_representations(build_index(3, 9), 2).empty());
    auto hits = multi_representations(build_index(2, 8), 2);
    bool has50 = false;
    for (const auto& [sum, pairs] : hits) has50 |= sum == 50;
    CHECK(has50);
}

TEST_CASE("verify_quadruple") {
    CHECK(verify_quadruple(3, Int(12), Int(1), Int(9), Int(10)) == Verdict::valid_nontrivial);
    CHECK(verify_quadruple(3, Int(5), Int(7), Int(7), Int(5)) == Verdict::valid_trivial);
    CHECK(verify_quadruple(3, Int(1), Int(2), Int(3), Int(4)) == Verdict::invalid);
}

TEST_CASE("completeness at limit 50") {
    auto idx = build_index(3, 50);
    std::size_t pairs = 0;
    for (const auto& [sum, v] : idx.table) pairs += v.size();
    CHECK(pairs == 50 * 51 / 2);

    std::mt19937 rng(99);
    std::uniform_int_distribution<long> dist(1, 50);
    for (int i = 0; i < 100; ++i) {
        long x = dist(rng), y = dist(rng);
        CHECK(contains_pair(idx, Int(x), Int(y)));
    }
}

TEST_CASE("signed index covers the negative-branch identity") {
    IndexOptions opts;
    opts.signed_components = true;
    opts.positive_only = false;
    auto idx = build_index(3, 13, opts);
    CHECK(contains_pair(idx, Int(-9), Int(-10)));
    CHECK(contains_pair(idx, Int(-12), Int(-1)));
    auto it = idx.table.find(Int(-1729));
    REQUIRE(it != idx.table.end());
    CHECK(it->second.size() >= 2);
}

TEST_CASE("deterministic serialization") {
    std::ostringstream a, b;
    save_index(build_index(3, 20), a);
    save_index(build_index(3, 20), b);
    CHECK(a.str() == b.str());
    CHECK(a.str().substr(0, 8) == "EQPWIDX1");
}

TEST_CASE("save/load round-trip") {
    auto idx = build_index(3, 13);
    std::stringstream buf;
    save_index(idx, buf);
    auto loaded = load_index(buf);
    CHECK(loaded.n == idx.n);
    CHECK(loaded.limit == idx.limit);
    CHECK(loaded.options.positive_only == idx.options.positive_only);
    CHECK(loaded.table == idx.table);
}

TEST_CASE("load rejects a bad header") {
    std::stringstream buf("NOTANIDX0000000000000000");
    CHECK_THROWS_AS(load_index(buf), std::runtime_error);
}

TEST_CASE("capacity error on budget overflow") {
    IndexOptions opts;
    opts.pair_budget = 10;
    CHECK_THROWS_AS(build_index(3, 100, opts), capacity_error);
    CHECK_THROWS_AS(build_index(3, 0), std::domain_error);
    CHECK_THROWS_AS(build_index(5, 10), std::domain_error);
}
