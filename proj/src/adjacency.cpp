#include "dyngraph/adjacency.hpp"

#include <algorithm>
#include <string>

#include "dyngraph/error.hpp"

namespace dyngraph {

void SwapDeleteAdjacency::remove(VertexId v, VertexId w) {
    auto& list = lists_[v];
    auto it = std::find(list.begin(), list.end(), w);
    if (it == list.end()) {
        throw InvalidInput("vertex " + std::to_string(w) + " is not a neighbor of " + std::to_string(v));
    }
    *it = list.back();
    list.pop_back();
}

bool HashedAdjacency::add_edge(const EdgeKey& e) {
    const bool fresh = sets_[e.u].insert(e.v).second;
    sets_[e.v].insert(e.u);
    return fresh;
}

bool HashedAdjacency::remove_edge(const EdgeKey& e) {
    const bool existed = sets_[e.u].erase(e.v) != 0;
    sets_[e.v].erase(e.u);
    return existed;
}

std::span<const RankedNeighbor> LazyRankedAdjacency::compact(VertexId v) {
    Slot& s = slots_[v];
    if (s.sorted_prefix < s.live.size()) {
        const auto mid = s.live.begin() + static_cast<std::ptrdiff_t>(s.sorted_prefix);
        std::sort(mid, s.live.end());
        std::inplace_merge(s.live.begin(), mid, s.live.end());
    }
    if (!s.dead.empty()) {
        std::sort(s.dead.begin(), s.dead.end());
        // Both arrays are sorted: one merge pass filters the tombstoned entries.
        auto dead = s.dead.begin();
        std::size_t out = 0;
        for (std::size_t i = 0; i < s.live.size(); ++i) {
            const RankedNeighbor x = s.live[i];
            while (dead != s.dead.end() && *dead < x) {
                ++dead;
            }
            if (dead != s.dead.end() && *dead == x) {
                ++dead;
                continue;
            }
            s.live[out++] = x;
        }
        s.live.resize(out);
        s.dead.clear();
    }
    s.sorted_prefix = s.live.size();
    return s.live;
}

} // namespace dyngraph
