#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "equalpow/generator.hpp"
#include "equalpow/oracle.hpp"
#include "equalpow/solver.hpp"

using namespace equalpow;
using nlohmann::json;

namespace {

constexpr int kExitFound = 0;
constexpr int kExitError = 1;
constexpr int kExitNone = 2;
constexpr int kExitTrivial = 3;
constexpr int kExitSelfCheck = 4;

struct OutputSink {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

json quadruple_json(const Quadruple& q) {
    return json{{"n", q.n},           {"A", q.A.get_str()},
                {"B", q.B.get_str()}, {"C", q.C.get_str()},
                {"D", q.D.get_str()}, {"sum", q.sum.get_str()},
                {"provenance", q.provenance.describe()}};
}

// Exit 4 path: every record re-verifies before printing.
bool self_check(const Quadruple& q) {
    return oracle::verify_quadruple(q.n, q.A, q.B, q.C, q.D) ==
               oracle::Verdict::valid_nontrivial &&
           holds_exactly(q);
}

std::uint64_t pair_budget_from_env() {
    if (const char* env = std::getenv("EQUALPOW_PAIR_BUDGET"))
        return std::strtoull(env, nullptr, 10);
    return oracle::kDefaultPairBudget;
}

int run_solve(int n, const std::string& delta_str, bool positive_only,
              bool include_negative_branch, const std::string& format,
              OutputSink& sink) {
    Int delta;
    try {
        delta = Int(delta_str);
    } catch (const std::invalid_argument&) {
        std::cerr << "error: delta is not a valid integer: " << delta_str << "\n";
        return kExitError;
    }
    if (delta <= 0) {
        std::cerr << "error: delta must be positive\n";
        return kExitError;
    }

    EnumerateOptions opts;
    opts.positive_only = positive_only;
    opts.include_negative_branch = include_negative_branch;
    const auto quads = enumerate_identities(n, delta, opts);

    for (const auto& q : quads) {
        if (!self_check(q)) {
            std::cerr << "error: emitted record failed self-check\n";
            return kExitSelfCheck;
        }
        if (format == "csv")
            sink.out() << q.A << ',' << q.B << ',' << q.C << ',' << q.D << ','
                       << q.sum << '\n';
        else
            sink.out() << quadruple_json(q).dump() << '\n';
    }
    return quads.empty() ? kExitNone : kExitFound;
}

int run_gen(std::uint64_t from, std::uint64_t to, bool sums_only,
            const std::string& format, OutputSink& sink) {
    for (std::uint64_t c1 = from; c1 <= to; ++c1) {
        const Quadruple q = gen::gen_quadruple(c1);
        if (sums_only) {
            sink.out() << q.sum << '\n';
            continue;
        }
        if (!self_check(q)) {
            std::cerr << "error: emitted record failed self-check\n";
            return kExitSelfCheck;
        }
        if (format == "csv")
            sink.out() << c1 << ',' << q.A << ',' << q.B << ',' << q.C << ','
                       << q.D << ',' << q.sum << '\n';
        else {
            json j = quadruple_json(q);
            j["c1"] = c1;
            sink.out() << j.dump() << '\n';
        }
    }
    return kExitFound;
}

int run_verify(int n, const std::vector<std::string>& vals) {
    Int a, b, c, d;
    try {
        a = Int(vals[0]);
        b = Int(vals[1]);
        c = Int(vals[2]);
        d = Int(vals[3]);
    } catch (const std::invalid_argument&) {
        std::cerr << "error: arguments must be decimal integers\n";
        return kExitError;
    }
    const auto verdict = oracle::verify_quadruple(n, a, b, c, d);
    const char* name = verdict == oracle::Verdict::valid_nontrivial ? "valid_nontrivial"
                       : verdict == oracle::Verdict::valid_trivial  ? "valid_trivial"
                                                                    : "invalid";
    json j{{"n", n},           {"A", a.get_str()}, {"B", b.get_str()},
           {"C", c.get_str()}, {"D", d.get_str()}, {"verdict", name}};
    std::cout << j.dump() << '\n';
    switch (verdict) {
        case oracle::Verdict::valid_nontrivial: return kExitFound;
        case oracle::Verdict::valid_trivial: return kExitTrivial;
        case oracle::Verdict::invalid: return kExitNone;
    }
    return kExitError;
}

int run_oracle(int n, std::int64_t limit, std::size_t ways, bool positive_only,
               bool signed_components, const std::string& format, OutputSink& sink) {
    oracle::IndexOptions opts;
    opts.positive_only = positive_only;
    opts.signed_components = signed_components;
    opts.pair_budget = pair_budget_from_env();

    oracle::SumIndex index;
    try {
        index = oracle::build_index(n, limit, opts);
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what()
                  << " (raise EQUALPOW_PAIR_BUDGET to allow larger indexes)\n";
        return kExitError;
    }

    const auto hits = oracle::multi_representations(index, ways);
    for (const auto& [sum, pairs] : hits) {
        if (format == "csv") {
            sink.out() << sum;
            for (const auto& [x, y] : pairs) sink.out() << ',' << x << ',' << y;
            sink.out() << '\n';
        } else {
            json jp = json::array();
            for (const auto& [x, y] : pairs)
                jp.push_back({x.get_str(), y.get_str()});
            json j{{"n", n}, {"sum", sum.get_str()}, {"pairs", jp}, {"provenance", "oracle"}};
            sink.out() << j.dump() << '\n';
        }
    }
    return hits.empty() ? kExitNone : kExitFound;
}

// O(P^2) pairwise scan over int64 sums, the slow baseline. limit is kept
// small by the caller.
std::size_t naive_pairs_multirep_count(int n, std::int64_t limit) {
    std::vector<std::int64_t> sums;
    for (std::int64_t x = 1; x <= limit; ++x)
        for (std::int64_t y = x; y <= limit; ++y) {
            std::int64_t s = 1;
            for (int i = 0; i < n; ++i) s *= x;
            std::int64_t t = 1;
            for (int i = 0; i < n; ++i) t *= y;
            sums.push_back(s + t);
        }
    std::size_t hits = 0;
    for (std::size_t i = 0; i < sums.size(); ++i) {
        bool seen_before = false;
        for (std::size_t j = 0; j < i && !seen_before; ++j)
            seen_before = sums[j] == sums[i];
        if (seen_before) continue;  // duplicated sum already counted at its first index
        for (std::size_t j = i + 1; j < sums.size(); ++j) {
            if (sums[j] == sums[i]) {
                ++hits;
                break;
            }
        }
    }
    return hits;
}

int run_bench(int n, const std::vector<std::int64_t>& limits,
              const std::vector<std::uint64_t>& c1s, OutputSink& sink) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point start) {
        return std::chrono::duration<double, std::milli>(clock::now() - start).count();
    };

    sink.out() << "method,parameter,wall_time_ms,solutions_found\n";
    for (std::uint64_t c1 : c1s) {
        const auto start = clock::now();
        gen::gen_quadruple(c1);
        sink.out() << "generator," << c1 << ',' << ms_since(start) << ",1\n";
    }
    for (std::int64_t limit : limits) {
        oracle::IndexOptions opts;
        opts.pair_budget = pair_budget_from_env();
        const auto start = clock::now();
        const auto index = oracle::build_index(n, limit, opts);
        const auto hits = oracle::multi_representations(index, 2);
        sink.out() << "oracle-mitm," << limit << ',' << ms_since(start) << ','
                   << hits.size() << '\n';
    }
    for (std::int64_t limit : limits) {
        if (limit > 200) continue;  // quadratic pair scan; keep it honest but bounded
        const auto start = clock::now();
        const std::size_t hits = naive_pairs_multirep_count(n, limit);
        sink.out() << "naive-pairs," << limit << ',' << ms_since(start) << ','
                   << hits << '\n';
    }
    return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic solver and generator for A^n + B^n = C^n + D^n"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    bool positive_only = true;
    bool include_negative_branch = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "output file (default stdout)");
    };

    // solve
    int solve_n = 3;
    std::string delta_str;
    auto* solve = app.add_subcommand("solve", "enumerate identities for a given delta");
    solve->add_option("--n", solve_n, "exponent")->check(CLI::IsMember({2, 3}))->required();
    solve->add_option("--delta", delta_str, "common difference A^n - C^n")->required();
    solve->add_flag("--positive-only,!--no-positive-only", positive_only,
                    "require strictly positive components (default on)");
    solve->add_flag("--include-negative-branch", include_negative_branch,
                    "also emit the minus-branch family (n=3)");
    add_common(solve);

    // gen
    std::uint64_t c1_from = 0, c1_to = 0;
    bool sums_only = false;
    auto* gen_cmd = app.add_subcommand("gen", "closed-form generator over a c1 range");
    gen_cmd->add_option("from", c1_from, "first c1")->required();
    gen_cmd->add_option("to", c1_to, "last c1")->required();
    gen_cmd->add_flag("--emit-sums-only", sums_only, "print only the A^3+B^3 terms");
    add_common(gen_cmd);

    // verify
    int verify_n = 3;
    std::vector<std::string> verify_vals;
    auto* verify = app.add_subcommand("verify", "check one quadruple");
    verify->add_option("n", verify_n, "exponent")->check(CLI::IsMember({2, 3}))->required();
    verify->add_option("values", verify_vals, "A B C D")->expected(4)->required();

    // oracle
    int oracle_n = 3;
    std::int64_t limit = 0;
    std::size_t ways = 2;
    bool signed_components = false;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force multi-representation search");
    oracle_cmd->add_option("--n", oracle_n, "exponent")->check(CLI::IsMember({2, 3}))->required();
    oracle_cmd->add_option("--limit", limit, "component bound N")->required();
    oracle_cmd->add_option("--ways", ways, "minimum distinct representations");
    oracle_cmd->add_flag("--positive-only,!--no-positive-only", positive_only,
                         "components start at 1 (default on)");
    oracle_cmd->add_flag("--signed", signed_components, "components range over [-N, N]");
    add_common(oracle_cmd);

    // bench
    int bench_n = 3;
    std::vector<std::int64_t> bench_limits;
    std::vector<std::uint64_t> bench_c1s;
    auto* bench = app.add_subcommand("bench", "timing comparison of the three methods");
    bench->add_option("--n", bench_n, "exponent")->check(CLI::IsMember({2, 3}));
    bench->add_option("--limit", bench_limits, "oracle limits to time");
    bench->add_option("--c1", bench_c1s, "generator parameters to time");
    add_common(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        OutputSink sink;
        sink.open(out_path);

        if (solve->parsed())
            return run_solve(solve_n, delta_str, positive_only, include_negative_branch,
                             format, sink);
        if (gen_cmd->parsed()) {
            if (c1_from > c1_to || c1_to > 10'000) {
                std::cerr << "error: require 0 <= from <= to <= 10000\n";
                return kExitError;
            }
            return run_gen(c1_from, c1_to, sums_only, format, sink);
        }
        if (verify->parsed()) return run_verify(verify_n, verify_vals);
        if (oracle_cmd->parsed())
            return run_oracle(oracle_n, limit, ways, positive_only, signed_components,
                              format, sink);
        if (bench->parsed()) return run_bench(bench_n, bench_limits, bench_c1s, sink);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
