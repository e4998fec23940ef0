#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "dyngraph/graph.hpp"

namespace dyngraph {

/// Per-vertex capacity to reserve up front for neighbor arrays: delta while
/// n * delta stays within 2^25 entries, else 0 (grow on demand).
inline std::size_t neighbor_reserve(std::size_t n, std::size_t delta) {
    return n * delta <= (std::size_t{1} << 25) ? delta : 0;
}

/// Per-vertex unsorted neighbor arrays. Removal swaps the victim with the
/// last element and pops.
class SwapDeleteAdjacency {
public:
    explicit SwapDeleteAdjacency(std::size_t n = 0, std::size_t reserve = 0) : lists_(n) {
        if (reserve != 0) {
            for (auto& l : lists_) {
                l.reserve(reserve);
            }
        }
    }

    std::size_t vertex_count() const { return lists_.size(); }

    void add(VertexId v, VertexId w) { lists_[v].push_back(w); }

    /// Throws InvalidInput if w is not a neighbor of v.
    void remove(VertexId v, VertexId w);

    void add_edge(const EdgeKey& e) {
        add(e.u, e.v);
        add(e.v, e.u);
    }
    void remove_edge(const EdgeKey& e) {
        remove(e.u, e.v);
        remove(e.v, e.u);
    }

    std::span<const VertexId> neighbors(VertexId v) const { return lists_[v]; }
    std::size_t degree(VertexId v) const { return lists_[v].size(); }

private:
    std::vector<std::vector<VertexId>> lists_;
};

/// Per-vertex hash sets of neighbors.
class HashedAdjacency {
public:
    explicit HashedAdjacency(std::size_t n = 0) : sets_(n) {}

    std::size_t vertex_count() const { return sets_.size(); }

    bool contains(VertexId v, VertexId w) const { return sets_[v].count(w) != 0; }
    bool add_edge(const EdgeKey& e);
    bool remove_edge(const EdgeKey& e);

    const std::unordered_set<VertexId>& neighbors(VertexId v) const { return sets_[v]; }
    std::size_t degree(VertexId v) const { return sets_[v].size(); }

private:
    std::vector<std::unordered_set<VertexId>> sets_;
};

struct RankedNeighbor {
    double rank = 0.0;
    VertexId vertex = 0;

    friend auto operator<=>(const RankedNeighbor&, const RankedNeighbor&) = default;
};

/// Per-vertex neighbor arrays ordered by edge rank, maintained lazily.
///
/// Insertions append to an unsorted tail and deletions append to a tombstone
/// array; `compact(v)` sorts the tail into the ordered prefix, drops every
/// tombstoned entry and clears the tombstones. Tombstones carry the rank of
/// the deleted edge so a neighbor that was deleted and re-inserted before
/// the next compaction keeps its new entry.
class LazyRankedAdjacency {
public:
    explicit LazyRankedAdjacency(std::size_t n = 0, std::size_t reserve = 0) : slots_(n) {
        if (reserve != 0) {
            for (auto& s : slots_) {
                s.live.reserve(reserve);
            }
        }
    }

    std::size_t vertex_count() const { return slots_.size(); }

    void insert(VertexId v, double rank, VertexId w) { slots_[v].live.push_back({rank, w}); }
    void remove(VertexId v, double rank, VertexId w) { slots_[v].dead.push_back({rank, w}); }

    /// Live neighbors of v sorted by rank ascending. The span stays valid
    /// until the next mutation at v.
    std::span<const RankedNeighbor> compact(VertexId v);

    std::size_t degree(VertexId v) const { return slots_[v].live.size() - slots_[v].dead.size(); }
    std::size_t pending_tombstones(VertexId v) const { return slots_[v].dead.size(); }

private:
    struct Slot {
        std::vector<RankedNeighbor> live;
        std::vector<RankedNeighbor> dead;
        std::size_t sorted_prefix = 0;
    };
    std::vector<Slot> slots_;
};

} // namespace dyngraph
