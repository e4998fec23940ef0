#pragma once

#include <cstdint>
#include <random>

namespace dyngraph {

/// Seeded random source shared by algorithms and generators.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
    }

    /// Uniform real strictly inside (0, 1).
    double open_unit() {
        // 53 random mantissa bits, shifted by half an ulp so neither 0 nor 1 occur.
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return open_unit() < p; }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// Derives an independent stream seed from a base seed and a stream index.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace dyngraph
