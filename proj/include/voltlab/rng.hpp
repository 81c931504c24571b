#pragma once

#include <cstdint>
#include <random>

namespace voltlab {

// Deterministic RNG used by all generators. Doubles are produced directly
// from the mt19937_64 stream (53 mantissa bits) instead of going through
// std::uniform_real_distribution, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

    // Uniform integer in [0, n), unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0)
            return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 engine_;
};

// Stream-splitting helper: derives an independent seed for substream `index`.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace voltlab
