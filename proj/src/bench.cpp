#include "dyngraph/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <numeric>

#include "dyngraph/error.hpp"
#include "dyngraph/registry.hpp"

namespace dyngraph {

// ------------------------------------------------------------------- Checker

Checker::Checker(const DynamicAlgorithm& alg) : alg_(alg) {
    if (alg.problem() == Problem::Coloring) {
        coloring_ = static_cast<const ColoringAlgorithm*>(&alg);
        colors_.emplace(alg.vertex_count(), alg.delta(), coloring_->colors());
    } else {
        matching_ = static_cast<const MatchingAlgorithm*>(&alg);
        partners_.emplace(alg.vertex_count());
    }
}

void Checker::record(const UpdateOp& op) {
    if (colors_) {
        colors_->record(op);
    } else {
        partners_->record(op);
    }
}

std::string Checker::check(bool full) {
    std::string problem = colors_ ? colors_->check(coloring_->colors()) : partners_->check(matching_->partners());
    if (!problem.empty() || !full) {
        return problem;
    }
    problem = colors_ ? colors_->full_check(coloring_->colors()) : partners_->full_check(matching_->partners());
    if (problem.empty()) {
        problem = alg_.audit();
    }
    if (problem.empty() && matching_ && matching_->rank_based()) {
        const Snapshot s = snapshot_of(*matching_, partners_->graph().edges());
        if (s.matching != greedy_lfmm(s)) {
            problem = "matching differs from the greedy lexicographically first maximal matching";
        }
    }
    return problem;
}

// ----------------------------------------------------------------- benchmark

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::size_t kBatch = 1024;

struct CorrectnessError {
    std::string what;
};

double elapsed_ns(Clock::time_point from, Clock::time_point to) {
    return static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(to - from).count());
}

/// One replay; returns the timed nanoseconds.
double replay(const RunConfig& config, const UpdateSequence& seq, std::uint64_t seed, bool include_init,
              bool checked, BenchReport& report) {
    double ns = 0.0;
    const auto t0 = Clock::now();
    auto alg = make_algorithm(config.algorithm, seq.n, seq.delta_bound, seed, config.options);
    if (include_init) {
        ns += elapsed_ns(t0, Clock::now());
    }
    std::optional<Checker> checker;
    if (checked) {
        checker.emplace(*alg);
    }
    const std::size_t every = config.check_every;
    const auto& ops = seq.ops;
    auto run_checks = [&](std::size_t from, std::size_t to) {
        for (std::size_t i = from; i < to; ++i) {
            checker->record(ops[i]);
        }
        const bool at_checkpoint = to % every == 0 || to == ops.size();
        if (!at_checkpoint) {
            return;
        }
        ++report.checks;
        // Full oracle passes are O(m log m); beyond small graphs run them
        // every 1000th checkpoint and at the end.
        const bool full = to == ops.size() || (to / every) % 1000 == 0 || seq.n <= 256;
        auto problem = checker->check(full);
        if (!problem.empty()) {
            throw CorrectnessError{"after op " + std::to_string(to) + ": " + problem};
        }
    };

    std::size_t i = 0;
    while (i < ops.size()) {
        std::size_t end = std::min(ops.size(), i + kBatch);
        if (i < seq.setup_ops) {
            end = std::min(end, seq.setup_ops);
        }
        if (checked) {
            end = std::min(end, (i / every + 1) * every);
        }
        const bool timed = i >= seq.setup_ops;
        const auto start = Clock::now();
        for (std::size_t j = i; j < end; ++j) {
            alg->apply(ops[j]);
        }
        if (timed) {
            ns += elapsed_ns(start, Clock::now());
        }
        if (checked) {
            run_checks(i, end);
        }
        i = end;
    }
    report.counters = alg->counters();
    return ns;
}

} // namespace

std::size_t default_check_every(std::size_t n) { return n <= 256 ? 1 : 1000; }

BenchReport run_benchmark(const RunConfig& config, const UpdateSequence& seq) {
    if (config.repetitions < 1) {
        throw InvalidInput("repetitions must be at least 1");
    }
    BenchReport report;
    report.algorithm = config.algorithm;
    report.instance = config.instance;
    report.ops = seq.ops.size() - std::min(seq.setup_ops, seq.ops.size());
    const bool include_init = config.include_init.value_or(problem_of(config.algorithm) == Problem::Matching);
    auto seed_of = [&](std::size_t rep) { return config.fixed_seed ? config.seed : derive_seed(config.seed, rep); };
    try {
        if (config.warmup) {
            BenchReport scratch;
            replay(config, seq, seed_of(0), include_init, false, scratch);
        }
        for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
            report.run_ns.push_back(replay(config, seq, seed_of(rep), include_init, config.check_every > 0, report));
        }
    } catch (const CorrectnessError& e) {
        report.status = RunStatus::CorrectnessFailure;
        report.failure = e.what;
    } catch (const InvariantViolation& e) {
        report.status = RunStatus::CorrectnessFailure;
        report.failure = e.what();
    } catch (const CascadeError& e) {
        report.status = RunStatus::Aborted;
        report.failure = e.what();
    } catch (const BudgetError& e) {
        report.status = RunStatus::Aborted;
        report.failure = e.what();
    }
    if (report.failed()) {
        report.run_ns.clear();
        return report;
    }
    if (report.ops > 0) {
        double sum = 0.0;
        for (double ns : report.run_ns) {
            sum += ns / static_cast<double>(report.ops);
        }
        report.avg_ns_per_op = sum / static_cast<double>(report.run_ns.size());
    }
    return report;
}

BenchReport verify_run(const std::string& algorithm, const UpdateSequence& seq, std::uint64_t seed,
                       std::size_t check_every) {
    RunConfig config;
    config.algorithm = algorithm;
    config.repetitions = 1;
    config.seed = seed;
    config.fixed_seed = true;
    config.warmup = false;
    config.check_every = std::max<std::size_t>(check_every, 1);
    return run_benchmark(config, seq);
}

// ---------------------------------------------------------------- statistics

double geometric_mean(const std::vector<double>& values) {
    if (values.empty()) {
        throw InvalidInput("geometric mean of an empty list");
    }
    double log_sum = 0.0;
    for (double v : values) {
        if (!(v > 0.0)) {
            throw InvalidInput("geometric mean needs positive values");
        }
        log_sum += std::log(v);
    }
    return std::exp(log_sum / static_cast<double>(values.size()));
}

std::vector<double> slowdowns(const std::vector<BenchReport>& reports) {
    std::map<std::string, std::size_t> fastest;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const BenchReport& r = reports[i];
        if (r.failed()) {
            continue;
        }
        const auto [it, fresh] = fastest.emplace(r.instance, i);
        const BenchReport& best = reports[it->second];
        if (!fresh && (r.avg_ns_per_op < best.avg_ns_per_op ||
                       (r.avg_ns_per_op == best.avg_ns_per_op && r.algorithm < best.algorithm))) {
            it->second = i;
        }
    }
    std::vector<double> out(reports.size(), 0.0);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (reports[i].failed()) {
            continue;
        }
        const std::size_t best = fastest.at(reports[i].instance);
        const double base = reports[best].avg_ns_per_op;
        out[i] = i == best ? 1.0 : (base > 0.0 ? reports[i].avg_ns_per_op / base : 1.0);
    }
    return out;
}

namespace {

// Generator specs contain commas, so such fields are quoted.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        out += ch;
        if (ch == '"') {
            out += '"';
        }
    }
    return out + '"';
}

} // namespace

std::string emit_csv(std::vector<BenchReport> reports) {
    if (reports.empty()) {
        throw InvalidInput("no reports to emit");
    }
    std::stable_sort(reports.begin(), reports.end(), [](const BenchReport& a, const BenchReport& b) {
        return std::tie(a.algorithm, a.instance) < std::tie(b.algorithm, b.instance);
    });
    const auto slow = slowdowns(reports);
    std::string out = "algorithm,instance,ops,avg_ns_per_op,slowdown,failed\n";
    char buf[64];
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const BenchReport& r = reports[i];
        out += csv_field(r.algorithm) + ',' + csv_field(r.instance) + ',' + std::to_string(r.ops) + ',';
        if (r.failed()) {
            out += ",,1\n";
            continue;
        }
        std::snprintf(buf, sizeof buf, "%.2f,%.2f,0\n", r.avg_ns_per_op, slow[i]);
        out += buf;
    }
    return out;
}

} // namespace dyngraph
