#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dyngraph {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

/// Canonical undirected edge: u < v.
struct EdgeKey {
    VertexId u = 0;
    VertexId v = 0;

    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;

    std::uint64_t packed() const { return (static_cast<std::uint64_t>(u) << 32) | v; }
    VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// Throws InvalidInput on a self-loop.
EdgeKey normalize_edge(VertexId a, VertexId b);

struct EdgeKeyHash {
    std::size_t operator()(const EdgeKey& e) const noexcept {
        std::uint64_t z = e.packed() + 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(z ^ (z >> 31));
    }
};

enum class UpdateKind : std::uint8_t { Insert, Delete };

struct UpdateOp {
    UpdateKind kind = UpdateKind::Insert;
    EdgeKey edge;

    friend bool operator==(const UpdateOp&, const UpdateOp&) = default;

    static UpdateOp insert(VertexId a, VertexId b) { return {UpdateKind::Insert, normalize_edge(a, b)}; }
    static UpdateOp remove(VertexId a, VertexId b) { return {UpdateKind::Delete, normalize_edge(a, b)}; }
};

/// An ordered list of edge updates over the fixed vertex set [0, n).
///
/// `setup_ops` leading operations build an initial graph and are excluded
/// from timing by the benchmark harness. `delta_bound` is the maximum degree
/// any vertex reaches while replaying `ops`; algorithms size their palettes
/// and count arrays from it.
struct UpdateSequence {
    std::size_t n = 0;
    std::vector<UpdateOp> ops;
    std::size_t delta_bound = 0;
    std::size_t setup_ops = 0;
};

struct ValidationResult {
    std::size_t max_degree = 0;
    std::size_t final_edge_count = 0;
};

/// Replays `seq` and checks every operation against the current edge set.
/// Throws InvalidInput naming the offending op index on duplicate insert,
/// absent delete, out-of-range vertex or a degree above `delta_bound`.
ValidationResult validate_sequence(const UpdateSequence& seq);

/// Sets `delta_bound` to the maximum degree seen during replay.
/// Validates the sequence on the way.
void compute_delta_bound(UpdateSequence& seq);

std::string to_string(const EdgeKey& e);

} // namespace dyngraph

template <>
struct std::hash<dyngraph::EdgeKey> : dyngraph::EdgeKeyHash {};
