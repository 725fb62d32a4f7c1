/**
 * @file rng.hpp
 * @brief Seedable deterministic PRNG and the random-draw configuration used by
 *        the Las Vegas routines.
 *
 * The generator is splitmix64 (Steele, Lea, Flood 2014): a 64-bit counter run
 * through a fixed mixing function.  It is platform independent, so identical
 * seeds give identical run traces everywhere; output headers record the
 * algorithm identifier "splitmix64".
 */
#pragma once

#include <cstdint>

namespace rr {

inline constexpr const char* kRngAlgorithm = "splitmix64";

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from {0, ..., n-1} by rejection sampling (n >= 1).
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        // Largest multiple of n that fits in 64 bits; values at or above it
        // are rejected so the result is exactly uniform.
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

private:
    std::uint64_t state_;
};

/// Parameters for the randomized routines: the draw set is
/// E = {0, ..., sample_set_size - 1} (clamped to the field size), and each
/// Las Vegas loop gives up after `retry_budget` failed draws.
struct RandomConfig {
    std::uint64_t sample_set_size = 0;  // 0 means "use the whole field"
    int retry_budget = 8;

    std::uint64_t effective_sample_size(std::uint64_t p) const {
        std::uint64_t n = sample_set_size == 0 ? p : sample_set_size;
        return n < p ? n : p;
    }
};

/// One draw from the sample set E.
inline std::uint64_t draw_sample(Rng& rng, const RandomConfig& cfg,
                                 std::uint64_t p) {
    return rng.below(cfg.effective_sample_size(p));
}

}  // namespace rr
