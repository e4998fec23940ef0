#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dyngraph/algorithm.hpp"

namespace dyngraph {

/// Ids of all nine algorithms: the coloring ones first, then matching.
const std::vector<std::string>& algorithm_ids();

/// Throws InvalidInput on an unknown id.
Problem problem_of(std::string_view id);

/// Constructs the algorithm registered under id.
std::unique_ptr<DynamicAlgorithm> make_algorithm(std::string_view id, std::size_t n, std::size_t delta,
                                                 std::uint64_t seed, const AlgorithmOptions& options = {});

} // namespace dyngraph
