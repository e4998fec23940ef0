#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyngraph/graph.hpp"
#include "dyngraph/rng.hpp"

namespace dyngraph {

using Color = std::uint32_t;

/// Work counters exposed to the benchmark harness. Fields that do not apply
/// to an algorithm stay zero.
struct Counters {
    std::uint64_t recolors = 0;
    std::uint64_t max_cascade_depth = 0;
    std::uint64_t partner_search_steps = 0;
    std::uint64_t level_changes = 0;
    std::uint64_t queue_pushes = 0;
    std::uint64_t index_updates = 0;

    friend bool operator==(const Counters&, const Counters&) = default;
};

struct AlgorithmOptions {
    /// Maximum recoloring cascade depth before CascadeError.
    std::size_t cascade_cap = 1'000'000;
    /// Upper bound on n * (Delta + 1) count-array entries.
    std::size_t count_budget = std::size_t{1} << 28;
    /// Hier1Match degree threshold for rising to level 1; 0 selects sqrt(n).
    std::size_t hier1_threshold = 0;
};

enum class Problem { Coloring, Matching };

/// Uniform interface of every fully dynamic algorithm: construct over a
/// fixed vertex set, then feed it valid updates one at a time.
class DynamicAlgorithm {
public:
    DynamicAlgorithm(std::size_t n, std::size_t delta, std::uint64_t seed) : n_(n), delta_(delta), rng_(seed) {}
    virtual ~DynamicAlgorithm() = default;

    DynamicAlgorithm(const DynamicAlgorithm&) = delete;
    DynamicAlgorithm& operator=(const DynamicAlgorithm&) = delete;

    virtual std::string_view id() const = 0;
    virtual Problem problem() const = 0;
    virtual void apply(const UpdateOp& op) = 0;

    /// Recomputes the algorithm's auxiliary structures from scratch and
    /// returns a description of the first mismatch, or an empty string.
    virtual std::string audit() const { return {}; }

    std::size_t vertex_count() const { return n_; }
    std::size_t delta() const { return delta_; }
    const Counters& counters() const { return counters_; }

protected:
    std::size_t n_;
    std::size_t delta_;
    Rng rng_;
    Counters counters_;
};

class ColoringAlgorithm : public DynamicAlgorithm {
public:
    ColoringAlgorithm(std::size_t n, std::size_t delta, std::uint64_t seed);

    Problem problem() const final { return Problem::Coloring; }
    std::size_t palette_size() const { return delta_ + 1; }
    Color color_of(VertexId v) const { return xi_[v]; }
    const std::vector<Color>& colors() const { return xi_; }

protected:
    Color random_color() { return static_cast<Color>(rng_.below(delta_ + 1)); }
    void check_count_budget(const AlgorithmOptions& options) const;

    std::vector<Color> xi_;
};

class MatchingAlgorithm : public DynamicAlgorithm {
public:
    MatchingAlgorithm(std::size_t n, std::size_t delta, std::uint64_t seed)
        : DynamicAlgorithm(n, delta, seed), partner_(n, kNoVertex) {}

    Problem problem() const final { return Problem::Matching; }
    VertexId partner(VertexId v) const { return partner_[v]; }
    bool matched(VertexId v) const { return partner_[v] != kNoVertex; }
    const std::vector<VertexId>& partners() const { return partner_; }

    /// Matching edges in ascending order.
    std::vector<EdgeKey> matching() const;
    std::size_t matching_size() const;

    /// True for algorithms that maintain the lexicographically first
    /// maximal matching under random edge ranks.
    virtual bool rank_based() const { return false; }
    /// Current edge ranks; empty unless rank_based().
    virtual std::vector<std::pair<EdgeKey, double>> edge_ranks() const { return {}; }

protected:
    std::vector<VertexId> partner_;
};

} // namespace dyngraph
