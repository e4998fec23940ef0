// bench: run, generate and verify dynamic graph algorithm instances.
//
// Exit codes: 0 ok, 1 correctness failure, 2 usage error, 3 algorithm abort.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dyngraph/bench.hpp"
#include "dyngraph/error.hpp"
#include "dyngraph/instance.hpp"
#include "dyngraph/registry.hpp"
#include "dyngraph/sequence_io.hpp"

using namespace dyngraph;

namespace {

enum Exit { kOk = 0, kCorrectness = 1, kUsage = 2, kAbort = 3 };

int exit_code(const std::vector<BenchReport>& reports) {
    int code = kOk;
    for (const BenchReport& r : reports) {
        if (r.status == RunStatus::CorrectnessFailure) {
            return kCorrectness;
        }
        if (r.status == RunStatus::Aborted) {
            code = kAbort;
        }
    }
    return code;
}

void print_counters(const BenchReport& r) {
    const Counters& c = r.counters;
    std::fprintf(stderr,
                 "%s %s: %s recolors=%llu max_cascade=%llu search_steps=%llu level_changes=%llu "
                 "queue_pushes=%llu index_updates=%llu\n",
                 r.algorithm.c_str(), r.instance.c_str(), r.failed() ? r.failure.c_str() : "ok",
                 static_cast<unsigned long long>(c.recolors), static_cast<unsigned long long>(c.max_cascade_depth),
                 static_cast<unsigned long long>(c.partner_search_steps),
                 static_cast<unsigned long long>(c.level_changes), static_cast<unsigned long long>(c.queue_pushes),
                 static_cast<unsigned long long>(c.index_updates));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark harness for fully dynamic coloring and matching algorithms"};
    app.require_subcommand(1);

    std::vector<std::string> algos;
    std::vector<std::string> instances;
    std::size_t reps = 5;
    std::uint64_t seed = 1;
    std::size_t check_every = 0;
    bool include_init = false;
    bool fixed_seed = false;
    std::string csv_path;

    auto* run = app.add_subcommand("run", "Time algorithms on instances");
    run->add_option("--algo", algos, "Algorithm id (repeatable, or comma separated; `all` for every id)")
        ->required()
        ->delimiter(',');
    run->add_option("--instance", instances, "Sequence file or generator spec such as er:n=1024,m=65536,rho=0.25")
        ->required();
    run->add_option("--reps", reps, "Timed repetitions")->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "Base seed");
    run->add_option("--check-every", check_every, "Oracle checkpoint period in updates (0 disables)");
    run->add_flag("--include-init", include_init, "Also time algorithm construction");
    run->add_flag("--fixed-seed", fixed_seed, "Use the base seed for every repetition");
    run->add_option("--csv", csv_path, "Write the CSV report here instead of stdout");

    GeneratorConfig gen;
    std::string gen_spec;
    std::string out_path;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an update sequence");
    gen_cmd->add_option("--spec", gen_spec, "Generator spec; overrides the individual flags");
    gen_cmd->add_option("--kind", gen.kind, "er, rhg, clashing, equal-degree, sliding-window or temporal");
    gen_cmd->add_option("--n", gen.n, "Vertex count");
    gen_cmd->add_option("--m", gen.m, "Edge count");
    gen_cmd->add_option("--rho", gen.rho, "Deletion rate");
    gen_cmd->add_option("--phi", gen.phi, "Sliding window size");
    gen_cmd->add_option("--eta", gen.eta, "Probability of deleting the oldest matched edge");
    gen_cmd->add_option("--delta", gen.delta, "Degree bound");
    gen_cmd->add_option("--updates", gen.updates, "Number of dynamic updates");
    gen_cmd->add_option("--seed", gen.seed, "Generator seed");
    gen_cmd->add_option("--target", gen.target, "Coloring algorithm the clashing generator plays against");
    gen_cmd->add_option("--target-seed", gen.target_seed, "Seed of the target algorithm");
    gen_cmd->add_option("--gamma", gen.gamma, "Power-law exponent of hyperbolic graphs");
    gen_cmd->add_option("--avg-deg", gen.avg_deg, "Average degree of hyperbolic graphs");
    gen_cmd->add_option("--path", gen.path, "Temporal edge file");
    gen_cmd->add_option("--out", out_path, "Output file (default stdout)");

    std::string verify_algo;
    std::string verify_instance;
    std::size_t verify_every = 0;
    auto* verify = app.add_subcommand("verify", "Replay once with oracle checks");
    verify->add_option("--algo", verify_algo, "Algorithm id")->required();
    verify->add_option("--instance", verify_instance, "Sequence file or generator spec")->required();
    verify->add_option("--seed", seed, "Algorithm seed");
    verify->add_option("--check-every", verify_every, "Checkpoint period (default 1 for n <= 256, else 1000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*run) {
            if (algos.size() == 1 && algos[0] == "all") {
                algos = algorithm_ids();
            }
            for (const auto& a : algos) {
                problem_of(a);
            }
            std::vector<BenchReport> reports;
            for (const auto& source : instances) {
                const UpdateSequence seq = load_instance(source);
                for (const auto& a : algos) {
                    RunConfig config;
                    config.algorithm = a;
                    config.instance = source;
                    config.repetitions = reps;
                    config.seed = seed;
                    config.fixed_seed = fixed_seed;
                    config.check_every = check_every;
                    if (include_init) {
                        config.include_init = true;
                    }
                    reports.push_back(run_benchmark(config, seq));
                    print_counters(reports.back());
                }
            }
            const std::string csv = emit_csv(reports);
            if (csv_path.empty()) {
                std::cout << csv;
            } else {
                std::ofstream out(csv_path);
                out << csv;
                if (!out) {
                    std::cerr << "cannot write " << csv_path << '\n';
                    return kUsage;
                }
            }
            return exit_code(reports);
        }
        if (*gen_cmd) {
            if (!gen_spec.empty()) {
                gen = parse_gen_spec(gen_spec);
            } else if (gen.kind.empty()) {
                std::cerr << "gen needs --spec or --kind\n";
                return kUsage;
            }
            const UpdateSequence seq = generate(gen);
            if (out_path.empty()) {
                write_sequence(std::cout, seq);
            } else {
                save_sequence(out_path, seq);
            }
            std::cerr << "n=" << seq.n << " ops=" << seq.ops.size() << " delta=" << seq.delta_bound
                      << " setup=" << seq.setup_ops << '\n';
            return kOk;
        }
        const UpdateSequence seq = load_instance(verify_instance);
        const std::size_t every = verify_every != 0 ? verify_every : default_check_every(seq.n);
        const BenchReport r = verify_run(verify_algo, seq, seed, every);
        if (r.failed()) {
            std::cout << "FAIL " << verify_algo << ": " << r.failure << '\n';
        } else {
            std::cout << "ok " << verify_algo << ": " << seq.ops.size() << " updates, " << r.checks
                      << " checkpoints\n";
        }
        return exit_code({r});
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CascadeError& e) {
        std::cerr << "aborted: " << e.what() << '\n';
        return kAbort;
    } catch (const BudgetError& e) {
        std::cerr << "aborted: " << e.what() << '\n';
        return kAbort;
    }
}
