#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "dyngraph/graph.hpp"

namespace dyngraph {

/// Parameters of one generated instance. Only the fields relevant to `kind`
/// are read.
///
///   er              random_update_sequence over gen_er(n, m): n m rho seed
///   rhg             random_update_sequence over gen_rhg: n avg_deg gamma rho seed
///   clashing        clashing_sequence against `target`: n delta updates seed target_seed
///   equal-degree    equal_degree_sequence: n delta updates seed
///   sliding-window  sliding_window_sequence over gen_er(n, m): n m phi eta seed
///   temporal        parse_temporal_file(path)
struct GeneratorConfig {
    std::string kind;
    std::size_t n = 1024;
    std::size_t m = 0;
    double rho = 0.0;
    std::size_t phi = 0;
    double eta = 0.0;
    std::size_t delta = 0;
    std::size_t updates = 0;
    std::uint64_t seed = 1;
    std::string target;
    std::uint64_t target_seed = 1;
    double gamma = 2.8;
    double avg_deg = 0.0;
    std::string path;
};

/// Parses `<kind>:key=value,key=value...`, e.g. `er:n=1024,m=65536,rho=0.25`.
/// Throws InvalidInput on unknown kinds or keys.
GeneratorConfig parse_gen_spec(std::string_view spec);

/// Builds and validates the instance.
UpdateSequence generate(const GeneratorConfig& config);

/// Loads a sequence file if `source` names an existing file, otherwise
/// treats it as a generator spec.
UpdateSequence load_instance(const std::string& source);

} // namespace dyngraph
