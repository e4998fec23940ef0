#include "dyngraph/registry.hpp"

#include <functional>

#include "dyngraph/coloring.hpp"
#include "dyngraph/error.hpp"
#include "dyngraph/matching.hpp"

namespace dyngraph {

namespace {

using Factory = std::function<std::unique_ptr<DynamicAlgorithm>(std::size_t, std::size_t, std::uint64_t,
                                                                const AlgorithmOptions&)>;

struct Entry {
    std::string id;
    Problem problem;
    Factory make;
};

template <class A>
Factory factory() {
    return [](std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions& options) {
        return std::make_unique<A>(n, delta, seed, options);
    };
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {"recurse-col", Problem::Coloring, factory<RecurseCol>()},
        {"count-col", Problem::Coloring, factory<CountCol>()},
        {"randr-col", Problem::Coloring, factory<RandRCol>()},
        {"hier-col", Problem::Coloring, factory<HierCol>()},
        {"trivial-match", Problem::Matching, factory<TrivialMatch>()},
        {"hier1-match", Problem::Matching, factory<Hier1Match>()},
        {"hier2-match", Problem::Matching, factory<Hier2Match>()},
        {"randr1-match", Problem::Matching, factory<RandR1Match>()},
        {"randr2-match", Problem::Matching, factory<RandR2Match>()},
    };
    return table;
}

const Entry& find(std::string_view id) {
    for (const Entry& e : entries()) {
        if (e.id == id) {
            return e;
        }
    }
    throw InvalidInput("unknown algorithm `" + std::string(id) + "`");
}

} // namespace

const std::vector<std::string>& algorithm_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const Entry& e : entries()) {
            out.push_back(e.id);
        }
        return out;
    }();
    return ids;
}

Problem problem_of(std::string_view id) { return find(id).problem; }

std::unique_ptr<DynamicAlgorithm> make_algorithm(std::string_view id, std::size_t n, std::size_t delta,
                                                 std::uint64_t seed, const AlgorithmOptions& options) {
    return find(id).make(n, delta, seed, options);
}

} // namespace dyngraph
