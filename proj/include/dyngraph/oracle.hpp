#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "dyngraph/adjacency.hpp"
#include "dyngraph/algorithm.hpp"
#include "dyngraph/graph.hpp"

namespace dyngraph {

/// Brute-force view of one graph state. `ranks`, when non-empty, runs
/// parallel to `edges`.
struct Snapshot {
    std::size_t n = 0;
    std::vector<EdgeKey> edges;
    std::vector<double> ranks;
    std::optional<std::vector<Color>> colors;
    std::optional<std::vector<EdgeKey>> matching;
};

/// Greedy lexicographically first maximal matching: edges by ascending rank,
/// each taken if both endpoints are still free. Result sorted by EdgeKey.
/// Throws InvalidInput if ranks are missing or not pairwise distinct.
std::vector<EdgeKey> greedy_lfmm(const Snapshot& s);

/// Throws InvalidInput if colors are missing or a color exceeds delta.
bool is_proper_coloring(const Snapshot& s, std::size_t delta);

/// Throws InvalidInput if the matching is missing, is not a subset of the
/// edges, or shares a vertex between two of its edges.
bool is_maximal_matching(const Snapshot& s);

/// Cover condition: every non-matching edge has an incident matching edge of
/// strictly smaller rank. Also recomputes greedy_lfmm and throws
/// InvariantViolation if the two characterizations disagree.
bool is_lfmm(const Snapshot& s);

/// Snapshot text format: `n <count>`, then `i <u> <v>` edges, optional
/// `r <u> <v> <rank>` for an already listed edge, `m <u> <v>` matching edges
/// and `c <v> <color>` colors. `#` starts a comment line.
void write_snapshot(std::ostream& out, const Snapshot& s);
Snapshot read_snapshot(std::istream& in);

Snapshot snapshot_of(const ColoringAlgorithm& alg, const std::vector<EdgeKey>& edges);
Snapshot snapshot_of(const MatchingAlgorithm& alg, const std::vector<EdgeKey>& edges);

/// Shadow copy of the graph that lets per-update checks look only at the
/// vertices whose state changed.
class ShadowGraph {
public:
    explicit ShadowGraph(std::size_t n) : adj_(n) {}

    void apply(const UpdateOp& op);
    bool contains(const EdgeKey& e) const { return adj_.contains(e.u, e.v); }
    const HashedAdjacency& adjacency() const { return adj_; }
    std::vector<EdgeKey> edges() const;

private:
    HashedAdjacency adj_;
};

/// Checks a coloring incrementally. Between two checks only edges at a
/// recolored vertex or edges inserted in between can have turned
/// monochromatic, so a check costs the degrees of those vertices.
class ColoringWatch {
public:
    ColoringWatch(std::size_t n, std::size_t delta, const std::vector<Color>& initial);

    /// Applies op to the shadow graph.
    void record(const UpdateOp& op);
    /// Returns a description of the first violation, or an empty string.
    std::string check(const std::vector<Color>& colors);
    std::string after(const UpdateOp& op, const std::vector<Color>& colors) {
        record(op);
        return check(colors);
    }
    /// Full recheck through is_proper_coloring.
    std::string full_check(const std::vector<Color>& colors) const;
    const ShadowGraph& graph() const { return graph_; }

private:
    std::size_t delta_;
    ShadowGraph graph_;
    std::vector<Color> last_;
    std::vector<EdgeKey> inserted_;
};

/// The matching counterpart: only vertices whose partner changed and the
/// endpoints of updated edges can witness a new violation.
class MatchingWatch {
public:
    explicit MatchingWatch(std::size_t n);

    void record(const UpdateOp& op);
    std::string check(const std::vector<VertexId>& partners);
    std::string after(const UpdateOp& op, const std::vector<VertexId>& partners) {
        record(op);
        return check(partners);
    }
    std::string full_check(const std::vector<VertexId>& partners) const;
    const ShadowGraph& graph() const { return graph_; }

private:
    std::string check_vertex(VertexId x, const std::vector<VertexId>& partners) const;

    ShadowGraph graph_;
    std::vector<VertexId> last_;
    std::vector<VertexId> touched_;
};

} // namespace dyngraph
