// Acceptance suite: one PASS/FAIL line per criterion.
//
// usage: acceptance <test data dir> [criterion numbers...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dyngraph/bench.hpp"
#include "dyngraph/coloring.hpp"
#include "dyngraph/error.hpp"
#include "dyngraph/generators.hpp"
#include "dyngraph/matching.hpp"
#include "dyngraph/oracle.hpp"
#include "dyngraph/registry.hpp"

using namespace dyngraph;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

const std::vector<std::string> kColoring = {"recurse-col", "count-col", "randr-col", "hier-col"};
const std::vector<std::string> kMatching = {"trivial-match", "hier1-match", "hier2-match", "randr1-match",
                                            "randr2-match"};

// ------------------------------------------------------- small random suite

struct SmallCase {
    std::size_t n;
    std::uint64_t seed;
    UpdateSequence seq;
};

/// 200 sequences: n in {8,16,32,64} times 50 seeds, rho cycling through
/// {0, 0.25, 0.5, 0.75}, at most 2000 updates each.
const std::vector<SmallCase>& small_suite() {
    static const std::vector<SmallCase> suite = [] {
        std::vector<SmallCase> out;
        const double rhos[] = {0.0, 0.25, 0.5, 0.75};
        for (std::size_t n : {8, 16, 32, 64}) {
            for (std::uint64_t seed = 0; seed < 50; ++seed) {
                const double rho = rhos[seed % 4];
                const std::size_t max_m = n * (n - 1) / 2;
                const std::size_t m = std::min(max_m * 3 / 5, static_cast<std::size_t>(2000 / (1 + rho)));
                UpdateSequence seq =
                    random_update_sequence(n, gen_er(n, m, derive_seed(seed, n)), rho, derive_seed(seed, n + 1));
                if (seq.ops.size() > 2000) {
                    seq.ops.resize(2000);
                }
                compute_delta_bound(seq);
                out.push_back({n, seed, std::move(seq)});
            }
        }
        return out;
    }();
    return suite;
}

/// Worst iterations/bound ratio of the partner repair over the small suite;
/// filled in by criterion 1.
double g_worst_repair_ratio = -1.0;
std::size_t g_repair_runs = 0;
std::string g_repair_error;

template <class Alg>
void track_repair(const Alg& alg) {
    const RepairStats& s = alg.repair_stats();
    if (s.last_bound > 0) {
        g_worst_repair_ratio = std::max(g_worst_repair_ratio, static_cast<double>(s.last_iterations) / s.last_bound);
    }
}

Outcome lfmm_equality() {
    std::size_t checks = 0;
    g_worst_repair_ratio = 0.0;
    g_repair_runs = 0;
    for (const auto& c : small_suite()) {
        for (const std::string id : {"randr1-match", "randr2-match"}) {
            auto owned = make_algorithm(id, c.n, c.seq.delta_bound, derive_seed(c.seed, 99));
            auto& alg = static_cast<MatchingAlgorithm&>(*owned);
            for (std::size_t i = 0; i < c.seq.ops.size(); ++i) {
                try {
                    alg.apply(c.seq.ops[i]);
                } catch (const InvariantViolation& e) {
                    g_repair_error = e.what();
                    return {false, id + " n=" + std::to_string(c.n) + " seed=" + std::to_string(c.seed) + ": " +
                                       e.what()};
                }
                if (id == "randr1-match") {
                    track_repair(static_cast<const RandR1Match&>(alg));
                } else {
                    track_repair(static_cast<const RandR2Match&>(alg));
                }
                Snapshot s;
                s.n = c.n;
                for (const auto& [e, r] : alg.edge_ranks()) {
                    s.edges.push_back(e);
                    s.ranks.push_back(r);
                }
                s.matching = alg.matching();
                if (*s.matching != greedy_lfmm(s) || !is_lfmm(s)) {
                    return {false, id + " n=" + std::to_string(c.n) + " seed=" + std::to_string(c.seed) +
                                       " differs from greedy after update " + std::to_string(i)};
                }
                ++checks;
            }
            g_repair_runs += id == "randr1-match" ? static_cast<const RandR1Match&>(alg).repair_stats().runs
                                                  : static_cast<const RandR2Match&>(alg).repair_stats().runs;
        }
    }
    return {true, std::to_string(small_suite().size()) + " sequences, " + std::to_string(checks) +
                      " post-update comparisons"};
}

Outcome repair_bound() {
    if (g_worst_repair_ratio < 0.0) {
        lfmm_equality();
    }
    if (!g_repair_error.empty()) {
        return {false, g_repair_error};
    }
    return {g_worst_repair_ratio <= 1.0, std::to_string(g_repair_runs) + " repair runs, worst iterations/bound " +
                                             fmt("%.3f", g_worst_repair_ratio)};
}

// ------------------------------------------------------ property sweeps

Outcome verify_all(const std::vector<std::string>& ids, const std::vector<std::pair<std::string, UpdateSequence>>& suite,
                   std::size_t& runs) {
    for (const auto& [name, seq] : suite) {
        for (const auto& id : ids) {
            const BenchReport r = verify_run(id, seq, 1, 1);
            if (r.failed()) {
                return {false, id + " on " + name + ": " + r.failure};
            }
            ++runs;
        }
    }
    return {true, ""};
}

Outcome proper_coloring() {
    std::vector<std::pair<std::string, UpdateSequence>> suite;
    for (double rho : {0.0, 0.5}) {
        suite.emplace_back(fmt("er rho=%.1f", rho), random_update_sequence(1024, gen_er(1024, 1024 * 64, 21), rho, 22));
    }
    suite.emplace_back("equal-degree", equal_degree_sequence(1024, 64, 100000, 23).combined());
    std::size_t runs = 0;
    Outcome o = verify_all(kColoring, suite, runs);
    if (o.pass) {
        std::size_t updates = 0;
        for (const auto& [name, seq] : suite) {
            updates += seq.ops.size();
        }
        o.detail = std::to_string(runs) + " runs, every update checked, " + std::to_string(updates * 4) +
                   " algorithm updates";
    }
    return o;
}

Outcome maximality() {
    std::vector<std::pair<std::string, UpdateSequence>> suite;
    for (const auto& c : small_suite()) {
        suite.emplace_back("n=" + std::to_string(c.n) + " seed=" + std::to_string(c.seed), c.seq);
    }
    const auto edges = gen_er(1024, 1024 * 32, 31);
    for (double eta : {0.0, 1.0}) {
        suite.emplace_back(fmt("sliding-window eta=%.0f", eta), sliding_window_sequence(1024, edges, 4096, eta, 32));
    }
    std::size_t runs = 0;
    Outcome o = verify_all(kMatching, suite, runs);
    if (o.pass) {
        o.detail = std::to_string(runs) + " runs, every update checked";
    }
    return o;
}

// --------------------------------------------------------- timing orderings

BenchReport timed_run(const std::string& id, const std::string& name, const UpdateSequence& seq, std::size_t reps,
                 std::uint64_t seed, bool fixed_seed) {
    RunConfig config;
    config.algorithm = id;
    config.instance = name;
    config.repetitions = reps;
    config.seed = seed;
    config.fixed_seed = fixed_seed;
    return run_benchmark(config, seq);
}

Outcome ratio_at_least(const BenchReport& slow, const BenchReport& fast, double factor) {
    if (slow.failed() || fast.failed()) {
        return {false, slow.algorithm + ": " + slow.failure + " " + fast.algorithm + ": " + fast.failure};
    }
    const double ratio = slow.avg_ns_per_op / fast.avg_ns_per_op;
    return {ratio >= factor, slow.algorithm + fmt(" %.1f ns/op vs ", slow.avg_ns_per_op) + fast.algorithm +
                                 fmt(" %.1f ns/op, ratio %.2f", fast.avg_ns_per_op, ratio)};
}

Outcome clashing_blowup() {
    const std::uint64_t target_seed = 5;
    CountCol target(4096, 512, target_seed);
    const ClashingSequence clash = clashing_sequence(target, 100000, 6);
    if (clash.truncated) {
        return {false, "clashing generator stopped after " + std::to_string(clash.seq.ops.size()) + " updates"};
    }
    // The sequence is adaptive to CountCol's random state, so CountCol is
    // replayed with the seed it was generated against.
    const BenchReport count = timed_run("count-col", "clashing", clash.seq, 5, target_seed, true);
    const BenchReport recurse = timed_run("recurse-col", "clashing", clash.seq, 5, target_seed, true);
    return ratio_at_least(count, recurse, 10.0);
}

Outcome near_delta() {
    const UpdateSequence seq = equal_degree_sequence(8192, 512, 100000, 41).combined();
    const BenchReport recurse = timed_run("recurse-col", "equal-degree", seq, 5, 1, false);
    const BenchReport count = timed_run("count-col", "equal-degree", seq, 5, 1, false);
    return ratio_at_least(recurse, count, 1.2);
}

Outcome randr1_penalty() {
    const UpdateSequence seq = random_update_sequence(1024, gen_er(1024, 1024 * 64, 51), 0.25, 52);
    const BenchReport r1 = timed_run("randr1-match", "er", seq, 5, 1, false);
    const BenchReport r2 = timed_run("randr2-match", "er", seq, 5, 1, false);
    const BenchReport triv = timed_run("trivial-match", "er", seq, 5, 1, false);
    const Outcome a = ratio_at_least(r1, r2, 10.0);
    const Outcome b = ratio_at_least(r1, triv, 10.0);
    return {a.pass && b.pass, a.detail + "; " + b.detail};
}

// ------------------------------------------------------------ the rest

Outcome matching_size() {
    std::vector<double> lfmm;
    std::vector<double> others;
    for (std::uint64_t i = 0; i < 20; ++i) {
        const double rho = 0.25 * static_cast<double>(i % 4);
        const UpdateSequence seq =
            random_update_sequence(1024, gen_er(1024, 1024 * (8 << (i % 3)), 60 + i), rho, 80 + i);
        for (const auto& id : kMatching) {
            auto alg = make_algorithm(id, seq.n, seq.delta_bound, derive_seed(i, 7));
            for (const auto& op : seq.ops) {
                alg->apply(op);
            }
            const auto& m = static_cast<const MatchingAlgorithm&>(*alg);
            (m.rank_based() ? lfmm : others).push_back(static_cast<double>(m.matching_size()));
        }
    }
    const double ratio = geometric_mean(lfmm) / geometric_mean(others);
    return {ratio >= 0.98 && ratio <= 1.0, fmt("LFMM/other geometric-mean size ratio %.4f (deficit %.2f%%)", ratio,
                                                100.0 * (1.0 - ratio))};
}

Outcome op_counts() {
    const UpdateSequence seq = random_update_sequence(2048, gen_er(2048, 100000, 71), 0.5, 72);
    std::size_t inserts = 0;
    std::size_t deletes = 0;
    for (const auto& op : seq.ops) {
        (op.kind == UpdateKind::Insert ? inserts : deletes) += 1;
    }
    const bool ok = inserts == 100000 && std::abs(static_cast<double>(deletes) - 50000.0) <= 5000.0;
    return {ok, std::to_string(inserts) + " insertions, " + std::to_string(deletes) + " deletions"};
}

Outcome determinism() {
    std::vector<std::pair<std::string, UpdateSequence>> suite;
    suite.emplace_back("er", random_update_sequence(1024, gen_er(1024, 1024 * 16, 81), 0.5, 82));
    suite.emplace_back("equal-degree", equal_degree_sequence(512, 32, 20000, 83).combined());
    for (const auto& [name, seq] : suite) {
        for (const auto& id : algorithm_ids()) {
            auto a = make_algorithm(id, seq.n, seq.delta_bound, 1234);
            auto b = make_algorithm(id, seq.n, seq.delta_bound, 1234);
            for (const auto& op : seq.ops) {
                a->apply(op);
                b->apply(op);
            }
            bool same = a->counters() == b->counters();
            if (a->problem() == Problem::Coloring) {
                same = same && static_cast<ColoringAlgorithm&>(*a).colors() ==
                                   static_cast<ColoringAlgorithm&>(*b).colors();
            } else {
                same = same && static_cast<MatchingAlgorithm&>(*a).partners() ==
                                   static_cast<MatchingAlgorithm&>(*b).partners();
            }
            if (!same) {
                return {false, id + " diverged on " + name};
            }
        }
    }
    return {true, std::to_string(algorithm_ids().size()) + " algorithms on " + std::to_string(suite.size()) +
                      " sequences"};
}

Outcome report_format(const std::string& data_dir) {
    const double g = geometric_mean({1.0, 100.0});
    std::ifstream in(data_dir + "/golden.csv", std::ios::binary);
    if (!in) {
        return {false, "cannot open " + data_dir + "/golden.csv"};
    }
    std::stringstream golden;
    golden << in.rdbuf();
    auto row = [](std::string alg, std::string inst, std::size_t ops, double ns, bool failed) {
        BenchReport r;
        r.algorithm = std::move(alg);
        r.instance = std::move(inst);
        r.ops = ops;
        r.avg_ns_per_op = ns;
        if (failed) {
            r.status = RunStatus::Aborted;
        }
        return r;
    };
    const std::string csv = emit_csv({row("trivial-match", "er-a", 1000, 31.25, false),
                                      row("recurse-col", "clash", 500, 6.5, false),
                                      row("randr2-match", "er-a", 1000, 250.0, false),
                                      row("recurse-col", "eq", 10, 0.0, true),
                                      row("count-col", "clash", 500, 1234.5, false)});
    const bool mean_ok = std::abs(g - 10.0) <= 1e-12;
    const bool csv_ok = csv == golden.str();
    return {mean_ok && csv_ok, fmt("geometric_mean({1,100}) = %.15g, ", g) +
                                   (csv_ok ? "CSV matches golden file" : "CSV differs from golden file")};
}

} // namespace

int main(int argc, char** argv) {
    const std::string data_dir = argc > 1 ? argv[1] : "tests/data";
    std::set<int> only;
    for (int i = 2; i < argc; ++i) {
        only.insert(std::atoi(argv[i]));
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"LFMM oracle equality", lfmm_equality},
        {"proper coloring", proper_coloring},
        {"maximality", maximality},
        {"repair iteration bound", repair_bound},
        {"clashing blow-up", clashing_blowup},
        {"near-delta degradation", near_delta},
        {"randr1-match penalty", randr1_penalty},
        {"matching-size deficit", matching_size},
        {"random-sequence op counts", op_counts},
        {"determinism", determinism},
        {"geometric mean and CSV golden file", [&] { return report_format(data_dir); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int number = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(number)) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", number, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
