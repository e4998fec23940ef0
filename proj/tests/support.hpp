#pragma once

// Brute-force reference computations used by the tests. They deliberately
// avoid the library's own oracle so the two can check each other.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "dyngraph/graph.hpp"

namespace testing_support {

using dyngraph::EdgeKey;
using dyngraph::UpdateKind;
using dyngraph::UpdateSequence;
using dyngraph::VertexId;

inline std::set<EdgeKey> final_edges(const UpdateSequence& seq, std::size_t prefix) {
    std::set<EdgeKey> edges;
    for (std::size_t i = 0; i < prefix; ++i) {
        const auto& op = seq.ops[i];
        if (op.kind == UpdateKind::Insert) {
            edges.insert(op.edge);
        } else {
            edges.erase(op.edge);
        }
    }
    return edges;
}

inline std::set<EdgeKey> final_edges(const UpdateSequence& seq) { return final_edges(seq, seq.ops.size()); }

inline std::vector<std::size_t> degrees(std::size_t n, const std::set<EdgeKey>& edges) {
    std::vector<std::size_t> d(n, 0);
    for (const auto& e : edges) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

/// Repeatedly takes the globally smallest-rank edge whose endpoints are both
/// free. Quadratic, and structurally different from a sort-then-scan.
inline std::set<EdgeKey> quadratic_lfmm(std::size_t n, const std::map<EdgeKey, double>& ranked) {
    std::vector<bool> used(n, false);
    std::set<EdgeKey> matching;
    for (;;) {
        const EdgeKey* best = nullptr;
        double best_rank = 2.0;
        for (const auto& [e, r] : ranked) {
            if (!used[e.u] && !used[e.v] && r < best_rank) {
                best = &e;
                best_rank = r;
            }
        }
        if (best == nullptr) {
            return matching;
        }
        used[best->u] = used[best->v] = true;
        matching.insert(*best);
    }
}

inline std::set<EdgeKey> matching_of(const std::vector<VertexId>& partners) {
    std::set<EdgeKey> m;
    for (VertexId v = 0; v < partners.size(); ++v) {
        if (partners[v] != dyngraph::kNoVertex && v < partners[v]) {
            m.insert({v, partners[v]});
        }
    }
    return m;
}

inline bool symmetric(const std::vector<VertexId>& partners) {
    for (VertexId v = 0; v < partners.size(); ++v) {
        const VertexId p = partners[v];
        if (p != dyngraph::kNoVertex && (p >= partners.size() || partners[p] != v)) {
            return false;
        }
    }
    return true;
}

/// Symmetric partner map, only graph edges, and no edge with two free ends.
inline bool valid_maximal(const std::set<EdgeKey>& edges, const std::vector<VertexId>& partners) {
    if (!symmetric(partners)) {
        return false;
    }
    for (const auto& e : matching_of(partners)) {
        if (!edges.count(e)) {
            return false;
        }
    }
    return std::none_of(edges.begin(), edges.end(), [&](const EdgeKey& e) {
        return partners[e.u] == dyngraph::kNoVertex && partners[e.v] == dyngraph::kNoVertex;
    });
}

template <class Colors>
bool proper(const std::set<EdgeKey>& edges, const Colors& colors, std::size_t delta) {
    for (auto c : colors) {
        if (c > delta) {
            return false;
        }
    }
    return std::none_of(edges.begin(), edges.end(), [&](const EdgeKey& e) { return colors[e.u] == colors[e.v]; });
}

} // namespace testing_support
