#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dyngraph/algorithm.hpp"
#include "dyngraph/graph.hpp"
#include "dyngraph/oracle.hpp"

namespace dyngraph {

/// Oracle checks bound to one live algorithm: incremental proper-coloring or
/// maximality checks, plus on full checks the algorithm's own audit and,
/// for rank-based matchers, LFMM equality.
class Checker {
public:
    explicit Checker(const DynamicAlgorithm& alg);

    void record(const UpdateOp& op);
    /// Returns a description of the first violation, or an empty string.
    std::string check(bool full);

private:
    const DynamicAlgorithm& alg_;
    const ColoringAlgorithm* coloring_ = nullptr;
    const MatchingAlgorithm* matching_ = nullptr;
    std::optional<ColoringWatch> colors_;
    std::optional<MatchingWatch> partners_;
};

struct RunConfig {
    std::string algorithm;
    std::string instance;
    std::size_t repetitions = 5;
    std::uint64_t seed = 1;
    /// Use `seed` itself for every repetition instead of derived seeds.
    /// Needed to replay a sequence generated adaptively against that seed.
    bool fixed_seed = false;
    /// Oracle checkpoint period in operations; 0 disables checks.
    std::size_t check_every = 0;
    /// Unset: time construction for matching algorithms only.
    std::optional<bool> include_init;
    bool warmup = true;
    AlgorithmOptions options;
};

enum class RunStatus { Ok, CorrectnessFailure, Aborted };

struct BenchReport {
    std::string algorithm;
    std::string instance;
    /// Timed operations per repetition (the setup prefix is excluded).
    std::size_t ops = 0;
    std::vector<double> run_ns;
    /// Arithmetic mean over repetitions of total time / ops.
    double avg_ns_per_op = 0.0;
    Counters counters;
    std::size_t checks = 0;
    RunStatus status = RunStatus::Ok;
    std::string failure;

    bool failed() const { return status != RunStatus::Ok; }
};

/// Replays `seq` through a fresh algorithm instance per repetition. Only
/// apply() calls are timed, in batches of up to 1024 operations that never
/// straddle an oracle checkpoint. One untimed warm-up replay precedes the
/// timed ones.
BenchReport run_benchmark(const RunConfig& config, const UpdateSequence& seq);

/// Default checkpoint period: every update up to 256 vertices, every 1000
/// updates above.
std::size_t default_check_every(std::size_t n);

/// Single oracle-checked replay.
BenchReport verify_run(const std::string& algorithm, const UpdateSequence& seq, std::uint64_t seed,
                       std::size_t check_every);

/// exp(mean(ln v)). Throws InvalidInput on an empty list or a value <= 0.
double geometric_mean(const std::vector<double>& values);

/// Slowdown of each report against the fastest successful report of its
/// instance; the fastest one (ties to the smaller algorithm id) is exactly 1.
/// Failed reports get 0.
std::vector<double> slowdowns(const std::vector<BenchReport>& reports);

/// `algorithm,instance,ops,avg_ns_per_op,slowdown,failed` rows sorted by
/// algorithm id, then instance id. Throws InvalidInput on an empty list.
std::string emit_csv(std::vector<BenchReport> reports);

} // namespace dyngraph
