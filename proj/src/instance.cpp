#include "dyngraph/instance.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>

#include "dyngraph/error.hpp"
#include "dyngraph/generators.hpp"
#include "dyngraph/registry.hpp"
#include "dyngraph/sequence_io.hpp"

namespace dyngraph {

namespace {

template <class T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    if constexpr (std::is_floating_point_v<T>) {
        try {
            std::size_t used = 0;
            value = std::stod(std::string(text), &used);
            if (used == text.size()) {
                return value;
            }
        } catch (const std::exception&) {
        }
    } else {
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && end == text.data() + text.size()) {
            return value;
        }
    }
    throw InvalidInput("bad value `" + std::string(text) + "` for " + std::string(key));
}

} // namespace

GeneratorConfig parse_gen_spec(std::string_view spec) {
    GeneratorConfig c;
    const auto colon = spec.find(':');
    c.kind = std::string(spec.substr(0, colon));
    if (c.kind != "er" && c.kind != "rhg" && c.kind != "clashing" && c.kind != "equal-degree" &&
        c.kind != "sliding-window" && c.kind != "temporal") {
        throw InvalidInput("unknown generator `" + c.kind + "`");
    }
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw InvalidInput("expected key=value in generator spec, got `" + std::string(item) + "`");
        }
        const std::string_view key = item.substr(0, eq);
        const std::string_view value = item.substr(eq + 1);
        if (key == "n") c.n = parse_number<std::size_t>(key, value);
        else if (key == "m") c.m = parse_number<std::size_t>(key, value);
        else if (key == "rho") c.rho = parse_number<double>(key, value);
        else if (key == "phi") c.phi = parse_number<std::size_t>(key, value);
        else if (key == "eta") c.eta = parse_number<double>(key, value);
        else if (key == "delta") c.delta = parse_number<std::size_t>(key, value);
        else if (key == "updates") c.updates = parse_number<std::size_t>(key, value);
        else if (key == "seed") c.seed = parse_number<std::uint64_t>(key, value);
        else if (key == "target_seed") c.target_seed = parse_number<std::uint64_t>(key, value);
        else if (key == "gamma") c.gamma = parse_number<double>(key, value);
        else if (key == "avg_deg") c.avg_deg = parse_number<double>(key, value);
        else if (key == "target") c.target = std::string(value);
        else if (key == "path") c.path = std::string(value);
        else throw InvalidInput("unknown generator key `" + std::string(key) + "`");
    }
    return c;
}

UpdateSequence generate(const GeneratorConfig& c) {
    UpdateSequence seq;
    if (c.kind == "er") {
        seq = random_update_sequence(c.n, gen_er(c.n, c.m, c.seed), c.rho, derive_seed(c.seed, 1));
    } else if (c.kind == "rhg") {
        seq = random_update_sequence(c.n, gen_rhg(c.n, c.avg_deg, c.gamma, c.seed), c.rho, derive_seed(c.seed, 1));
    } else if (c.kind == "clashing") {
        if (problem_of(c.target) != Problem::Coloring) {
            throw InvalidInput("clashing sequences need a coloring target");
        }
        auto alg = make_algorithm(c.target, c.n, c.delta, c.target_seed);
        seq = clashing_sequence(static_cast<ColoringAlgorithm&>(*alg), c.updates, c.seed).seq;
    } else if (c.kind == "equal-degree") {
        seq = equal_degree_sequence(c.n, c.delta, c.updates, c.seed).combined();
    } else if (c.kind == "sliding-window") {
        seq = sliding_window_sequence(c.n, gen_er(c.n, c.m, c.seed), c.phi, c.eta, derive_seed(c.seed, 1));
    } else if (c.kind == "temporal") {
        std::ifstream in(c.path);
        if (!in) {
            throw InvalidInput("cannot open " + c.path);
        }
        seq = parse_temporal_file(in).seq;
    } else {
        throw InvalidInput("unknown generator `" + c.kind + "`");
    }
    validate_sequence(seq);
    return seq;
}

UpdateSequence load_instance(const std::string& source) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) {
        return load_sequence(source);
    }
    return generate(parse_gen_spec(source));
}

} // namespace dyngraph
