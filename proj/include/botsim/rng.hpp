// Deterministic seeded generator for initial states.
//
// splitmix64 (public-domain constants). Kept deliberately tiny so a
// reimplementation in any language reproduces the same draw sequence;
// the constants and the draw order are documented in the README.

#pragma once

#include <cstdint>

namespace botsim {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] via modulo; bias is irrelevant at these range
    // sizes and the modulo form is trivial to reproduce elsewhere.
    std::int64_t bounded(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

private:
    std::uint64_t state_;
};

}  // namespace botsim
