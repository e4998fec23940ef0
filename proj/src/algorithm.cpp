#include "dyngraph/algorithm.hpp"

#include <string>

#include "dyngraph/error.hpp"

namespace dyngraph {

ColoringAlgorithm::ColoringAlgorithm(std::size_t n, std::size_t delta, std::uint64_t seed)
    : DynamicAlgorithm(n, delta, seed), xi_(n) {
    // The edge set starts empty, so any assignment is proper.
    for (auto& c : xi_) {
        c = random_color();
    }
}

void ColoringAlgorithm::check_count_budget(const AlgorithmOptions& options) const {
    const std::size_t entries = n_ * (delta_ + 1);
    if (delta_ + 1 != 0 && entries / (delta_ + 1) != n_) {
        throw BudgetError("count array size overflows");
    }
    if (entries > options.count_budget) {
        throw BudgetError("count arrays need " + std::to_string(entries) + " entries, budget is " +
                          std::to_string(options.count_budget));
    }
}

std::vector<EdgeKey> MatchingAlgorithm::matching() const {
    std::vector<EdgeKey> out;
    for (VertexId v = 0; v < partner_.size(); ++v) {
        if (partner_[v] != kNoVertex && v < partner_[v]) {
            out.push_back({v, partner_[v]});
        }
    }
    return out;
}

std::size_t MatchingAlgorithm::matching_size() const {
    std::size_t matched_vertices = 0;
    for (VertexId p : partner_) {
        matched_vertices += p != kNoVertex;
    }
    return matched_vertices / 2;
}

} // namespace dyngraph
