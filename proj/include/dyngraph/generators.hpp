#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dyngraph/algorithm.hpp"
#include "dyngraph/graph.hpp"

namespace dyngraph {

/// m distinct uniform random edges over n vertices, in random order.
/// Throws InvalidInput if m exceeds n(n-1)/2.
std::vector<EdgeKey> gen_er(std::size_t n, std::size_t m, std::uint64_t seed);

/// Threshold random hyperbolic graph: n points on a hyperbolic disk of
/// radius R with radial density alpha*sinh(alpha*r)/(cosh(alpha*R)-1),
/// alpha = (gamma-1)/2, joined iff their distance is below R. R is searched
/// so the average degree approaches avg_deg (capped at n-1); a request at
/// or above n-1 yields the complete graph. Throws InvalidInput if the result
/// misses the target by more than 25%.
std::vector<EdgeKey> gen_rhg(std::size_t n, double avg_deg, double gamma, std::uint64_t seed);

/// Inserts the shuffled edges one by one; before each step, with
/// probability rho/(1+rho), deletes a uniform random present edge instead.
UpdateSequence random_update_sequence(std::size_t n, std::vector<EdgeKey> edges, double rho, std::uint64_t seed);

struct ClashingSequence {
    UpdateSequence seq;
    bool truncated = false;
};

/// Adaptive insert-only sequence against a live coloring algorithm: each
/// step samples vertex pairs until both endpoints share their current color,
/// the edge is absent and both degrees are below the target's delta, then
/// emits the insertion and applies it to the target. Stops early with
/// `truncated` set when `max_draws` samples find no eligible pair.
ClashingSequence clashing_sequence(ColoringAlgorithm& target, std::size_t count, std::uint64_t seed,
                                   std::size_t max_draws = 0);

struct EqualDegreeInstance {
    UpdateSequence initial;
    UpdateSequence dynamic;
    double initial_avg_degree = 0.0;

    /// initial followed by dynamic, with the initial part as setup prefix.
    UpdateSequence combined() const;
};

/// Phase 1 adds random edges between vertices of degree below delta-1 until
/// the average degree reaches 0.99*(delta-1) or no edge can be added. Phase 2
/// toggles edges of an overlay graph of maximum degree 1 on top of it.
EqualDegreeInstance equal_degree_sequence(std::size_t n, std::size_t delta, std::size_t updates,
                                          std::uint64_t seed);

/// Inserts the shuffled edges while keeping at most phi of them live. Once
/// the window is full, each insertion is preceded by a deletion: with
/// probability eta the oldest live edge matched by a coupled TrivialMatch
/// (the oldest live edge if none is matched), otherwise the oldest live edge.
UpdateSequence sliding_window_sequence(std::size_t n, std::vector<EdgeKey> edges, std::size_t phi, double eta,
                                       std::uint64_t seed);

struct TemporalFile {
    UpdateSequence seq;
    /// Original vertex labels, indexed by compacted id.
    std::vector<std::string> labels;
    std::size_t dropped_duplicate = 0;
    std::size_t dropped_absent = 0;
    std::size_t dropped_self_loop = 0;
    std::size_t dropped_zero_weight = 0;
};

/// Reads `src dst weight [timestamp]` records as undirected updates:
/// positive weight inserts, negative weight deletes. Records that do not fit
/// the current graph are dropped and counted. Throws InvalidInput naming the
/// line on malformed input.
TemporalFile parse_temporal_file(std::istream& in);

} // namespace dyngraph
