#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "dyngraph/adjacency.hpp"
#include "dyngraph/algorithm.hpp"
#include "dyngraph/level_buckets.hpp"

namespace dyngraph {

inline constexpr double kUnmatchedRank = std::numeric_limits<double>::infinity();

/// Min-priority queue of (vertex, priority) entries. Equal priorities pop
/// in ascending vertex order. Duplicate vertices are allowed.
class RepairQueue {
public:
    struct Entry {
        double priority;
        VertexId vertex;

        friend auto operator<=>(const Entry&, const Entry&) = default;
    };

    void push(VertexId v, double priority);
    Entry pop();
    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }
    void clear() { heap_.clear(); }

private:
    std::vector<Entry> heap_;
};

/// Draws edge ranks in (0,1) that are unique among the live ranks.
class RankPool {
public:
    double draw(Rng& rng);
    /// Claims a caller-chosen rank. Throws InvalidInput if already live.
    void claim(double rank);
    void release(double rank) { live_.erase(rank); }
    void reserve(std::size_t count) { live_.reserve(count); }
    std::size_t size() const { return live_.size(); }

private:
    absl::flat_hash_set<double> live_;
};

/// Statistics of the most recent partner-repair run, and the worst run seen.
struct RepairStats {
    std::size_t last_iterations = 0;
    std::size_t last_bound = 0;
    std::size_t max_iterations = 0;
    std::size_t runs = 0;
};

// -------------------------------------------------------------------------

/// Matches an inserted edge whose endpoints are both free; when a matching
/// edge is deleted, each freed endpoint scans its neighbor array for a free
/// neighbor.
class TrivialMatch final : public MatchingAlgorithm {
public:
    TrivialMatch(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions& options = {});

    std::string_view id() const override { return "trivial-match"; }
    void apply(const UpdateOp& op) override;

    const SwapDeleteAdjacency& adjacency() const { return adj_; }

private:
    void rematch(VertexId v);

    SwapDeleteAdjacency adj_;
};

/// Shared machinery of the level-hierarchy matchers.
///
/// Every vertex keeps its neighbors bucketed by the level it last recorded
/// for them. Level -1 means free. O_v is the union of buckets below l(v);
/// bucket l >= l(v) is I_v[l]. In eager mode every level change is pushed to
/// all neighbors. In lazy mode only a drop to level -1 is pushed; other
/// records are refreshed when a partner search runs into them.
class HierMatchBase : public MatchingAlgorithm {
public:
    int level(VertexId v) const { return level_[v]; }
    int max_level() const { return max_level_; }
    const LevelBuckets& neighbors(VertexId v) const { return buckets_[v]; }
    /// |O_v| by recorded levels.
    std::size_t lower_count(VertexId v) const { return buckets_[v].count_below(level_[v]); }

    void apply(const UpdateOp& op) override;
    std::string audit() const override;

protected:
    HierMatchBase(std::size_t n, std::size_t delta, std::uint64_t seed, int max_level, bool lazy);

    /// Level at which a free vertex should steal a random lower neighbor,
    /// or 0 to take the search-for-a-free-neighbor path. Never exceeds cap.
    virtual int steal_level(VertexId v, int cap) const = 0;

private:
    struct Pending {
        VertexId vertex;
        int cap;
    };

    void set_level(VertexId v, int l);
    void settle_all();
    void settle(VertexId v, int cap);
    VertexId find_free_neighbor(VertexId v);
    void match(VertexId a, VertexId b, int l);

    int max_level_;
    bool lazy_;
    std::vector<int> level_;
    std::vector<LevelBuckets> buckets_;
    std::vector<Pending> pending_;
};

/// Two-level hierarchy: a freed vertex with at least `threshold` neighbors
/// below level 1 rises to level 1 and steals a uniformly random one of them.
class Hier1Match final : public HierMatchBase {
public:
    Hier1Match(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions& options = {});

    std::string_view id() const override { return "hier1-match"; }
    std::size_t threshold() const { return threshold_; }

protected:
    int steal_level(VertexId v, int cap) const override;

private:
    std::size_t threshold_;
};

/// ceil(log2 n) levels with lazily propagated level records. A freed vertex
/// rises to the highest level l with at least 2^(l+1) recorded neighbors
/// below l.
class Hier2Match final : public HierMatchBase {
public:
    Hier2Match(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions& options = {});

    std::string_view id() const override { return "hier2-match"; }

protected:
    int steal_level(VertexId v, int cap) const override;
};

/// Lexicographically first maximal matching under random edge ranks, with
/// every vertex's incident edges kept in an ordered index by eliminator
/// rank k(e) = min(pi(e), k(u), k(v)). Any change of a vertex rank re-keys
/// all of its incident edges.
class RandR1Match final : public MatchingAlgorithm {
public:
    RandR1Match(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions& options = {});

    std::string_view id() const override { return "randr1-match"; }
    void apply(const UpdateOp& op) override;
    std::string audit() const override;

    bool rank_based() const override { return true; }
    std::vector<std::pair<EdgeKey, double>> edge_ranks() const override;

    /// Inserts e with a caller-chosen rank instead of a random one.
    void insert_with_rank(const EdgeKey& e, double rank);

    double vertex_rank(VertexId v) const { return k_[v]; }
    double edge_rank(const EdgeKey& e) const { return edges_.at(e).rank; }
    double eliminator_rank(const EdgeKey& e) const { return edges_.at(e).eliminator; }
    const RepairStats& repair_stats() const { return stats_; }

private:
    struct EdgeData {
        double rank;
        double eliminator;
    };
    using Index = std::set<std::pair<double, VertexId>>;

    void insert(const EdgeKey& e, double rank);
    void remove(const EdgeKey& e);
    void reset_vertex(VertexId x, RepairQueue& queue);
    void refresh(VertexId x);
    void repair(RepairQueue& queue);

    std::vector<double> k_;
    absl::flat_hash_map<EdgeKey, EdgeData, EdgeKeyHash> edges_;
    std::vector<Index> index_;
    RankPool pool_;
    RepairQueue queue_;
    RepairStats stats_;
    std::vector<VertexId> scratch_;
};

/// Lexicographically first maximal matching under random edge ranks, with
/// neighbors ordered by the fixed edge rank in lazily compacted arrays.
/// Insertions, deletions and the partner repair follow the three routines
/// insert / remove / find_new_partners below.
class RandR2Match final : public MatchingAlgorithm {
public:
    RandR2Match(std::size_t n, std::size_t delta, std::uint64_t seed, const AlgorithmOptions& options = {});

    std::string_view id() const override { return "randr2-match"; }
    void apply(const UpdateOp& op) override;
    std::string audit() const override;

    bool rank_based() const override { return true; }
    std::vector<std::pair<EdgeKey, double>> edge_ranks() const override;

    /// Edge insertion with a freshly drawn unique rank.
    void insert(const EdgeKey& e);
    /// Edge insertion with a caller-chosen rank.
    void insert_with_rank(const EdgeKey& e, double rank);
    /// Edge deletion.
    void remove(const EdgeKey& e);

    /// Pops vertices in non-decreasing priority order and, for each popped
    /// (v, r_v), scans the neighbors w of v by ascending rank restricted to
    /// r_v < pi(v,w) < k(v); the first w with pi(v,w) < k(w) is matched to v
    /// after evicting the current partners of v and w into the queue.
    /// Returns when the queue is empty. Throws InvariantViolation if the
    /// run exceeds m + |initial queue| iterations, pops a priority below an
    /// earlier one, or enqueues a priority not above the current one.
    void find_new_partners(RepairQueue& queue);

    double vertex_rank(VertexId v) const { return k_[v]; }
    double edge_rank(const EdgeKey& e) const { return ranks_.at(e); }
    std::size_t edge_count() const { return ranks_.size(); }
    const RepairStats& repair_stats() const { return stats_; }

private:
    void link(const EdgeKey& e, double rank);
    void evict_partner(VertexId x, RepairQueue& queue, double floor);

    std::vector<double> k_;
    LazyRankedAdjacency adj_;
    absl::flat_hash_map<EdgeKey, double, EdgeKeyHash> ranks_;
    RankPool pool_;
    RepairQueue queue_;
    RepairStats stats_;
};

} // namespace dyngraph
