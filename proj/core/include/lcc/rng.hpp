#pragma once

#include <cstdint>
#include <random>

namespace lcc {

// Reproducible 64-bit generator: std::mt19937_64 seeded through a SplitMix64
// mix of (seed, stream). Distinct streams under one seed give independent
// sequences, which is how Monte-Carlo sweeps hand each (n, repetition) pair
// its own deterministic substream regardless of execution order or thread
// count. Uniform conversion is done by hand because the standard
// distributions' output sequences are implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(mix(seed, stream)) {}

    std::uint64_t raw() { return engine_(); }

    // Uniform on [0, 1): top 53 bits of the raw draw.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer on [0, n); n >= 1. Rejection-free modulo is fine here:
    // n is tiny compared to 2^64, so the bias is far below statistical noise,
    // and determinism is what actually matters.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
        x = splitmix(x);
        return splitmix(x);
    }

  private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

}  // namespace lcc
