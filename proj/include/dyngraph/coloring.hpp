#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "dyngraph/adjacency.hpp"
#include "dyngraph/algorithm.hpp"
#include "dyngraph/level_buckets.hpp"

namespace dyngraph {

/// Recolors a random endpoint of a clashing edge with a random color and
/// recursively recolors every neighbor that ends up sharing it.
class RecurseCol final : public ColoringAlgorithm {
public:
    RecurseCol(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions& options = {});

    std::string_view id() const override { return "recurse-col"; }
    void apply(const UpdateOp& op) override;

    const SwapDeleteAdjacency& adjacency() const { return adj_; }

private:
    void cascade(VertexId start);

    struct Frame {
        VertexId vertex;
        std::uint32_t next;
    };

    SwapDeleteAdjacency adj_;
    std::size_t cascade_cap_;
    std::vector<Frame> stack_;
};

/// Keeps, per vertex, how many neighbors hold each color and redraws the
/// color of a random clashing endpoint until it is unused in its
/// neighborhood.
class CountCol final : public ColoringAlgorithm {
public:
    CountCol(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions& options = {});

    std::string_view id() const override { return "count-col"; }
    void apply(const UpdateOp& op) override;
    std::string audit() const override;

    std::uint32_t neighbor_count(VertexId v, Color c) const { return counts_[slot(v, c)]; }
    const SwapDeleteAdjacency& adjacency() const { return adj_; }

    /// Draws a fresh color for v that no neighbor holds.
    void recolor(VertexId v);

private:
    std::size_t slot(VertexId v, Color c) const { return static_cast<std::size_t>(v) * (delta_ + 1) + c; }

    SwapDeleteAdjacency adj_;
    std::vector<std::uint32_t> counts_;
};

/// Random vertex ranks split each neighborhood into higher-rank (H) and
/// lower-rank (L) neighbors. A clash recolors the higher-rank endpoint with a
/// color absent from H and held by at most one L neighbor, which is then
/// recolored in turn.
class RandRCol final : public ColoringAlgorithm {
public:
    RandRCol(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions& options = {});

    std::string_view id() const override { return "randr-col"; }
    void apply(const UpdateOp& op) override;
    std::string audit() const override;

    double rank(VertexId v) const { return rank_[v]; }
    const IndexedSet& higher(VertexId v) const { return higher_[v]; }
    const IndexedSet& lower(VertexId v) const { return lower_[v]; }
    std::uint32_t hi_count(VertexId v, Color c) const { return hi_counts_[slot(v, c)]; }
    std::uint32_t lo_count(VertexId v, Color c) const { return lo_counts_[slot(v, c)]; }

    void recolor(VertexId v);

private:
    std::size_t slot(VertexId v, Color c) const { return static_cast<std::size_t>(v) * (delta_ + 1) + c; }
    bool admissible(VertexId v, Color c) const {
        return hi_counts_[slot(v, c)] == 0 && lo_counts_[slot(v, c)] <= 1;
    }
    Color draw_admissible(VertexId v);
    void assign(VertexId v, Color c);

    std::size_t cascade_cap_;
    std::vector<double> rank_;
    std::vector<IndexedSet> higher_;
    std::vector<IndexedSet> lower_;
    std::vector<std::uint32_t> hi_counts_;
    std::vector<std::uint32_t> lo_counts_;
};

/// Level hierarchy with thresholds 3^(l+2). A clash recolors the endpoint
/// that was recolored more recently. The recolored vertex moves to the
/// lowest level whose threshold exceeds its count of neighbors at or below
/// that level; at level -1 it takes a color free in its neighborhood,
/// otherwise it may also take a color held by exactly one strictly lower
/// neighbor, which is then recolored.
class HierCol final : public ColoringAlgorithm {
public:
    HierCol(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions& options = {});

    std::string_view id() const override { return "hier-col"; }
    void apply(const UpdateOp& op) override;
    std::string audit() const override;

    int level(VertexId v) const { return level_[v]; }
    int max_level() const { return max_level_; }
    /// 3^(l+2), the neighbor threshold at level l.
    std::size_t threshold(int l) const { return thresholds_[static_cast<std::size_t>(l + 1)]; }
    const LevelBuckets& neighbors(VertexId v) const { return buckets_[v]; }
    std::uint32_t neighbor_count(VertexId v, Color c) const { return counts_[slot(v, c)]; }
    std::uint64_t last_recolored(VertexId v) const { return stamp_[v]; }

    void recolor(VertexId v);

private:
    std::size_t slot(VertexId v, Color c) const { return static_cast<std::size_t>(v) * (delta_ + 1) + c; }
    int target_level(VertexId v) const;
    void set_level(VertexId v, int l);
    VertexId lower_holder(VertexId v, Color c) const;
    void assign(VertexId v, Color c);

    std::size_t cascade_cap_;
    int max_level_ = 0;
    std::vector<std::size_t> thresholds_;
    std::vector<int> level_;
    std::vector<LevelBuckets> buckets_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t clock_ = 0;
};

} // namespace dyngraph
