#pragma once

#include <cstdint>

#include "kemeny/error.hpp"

namespace kemeny {

namespace detail {

/// splitmix64 finalizer; bijective 64-bit mix.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

} // namespace detail

/// Small deterministic generator (splitmix64). Used everywhere randomness is
/// needed so that results are reproducible bit-for-bit across platforms;
/// standard-library distributions are implementation-defined and are avoided.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return detail::mix64(state_);
    }

    /// Unbiased integer in [0, bound) via rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) fail(ErrorKind::InvalidArgument, "bound must be positive");
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Derives an independent stream seed from (seed, key). Chaining calls yields
/// the splittable streams used by per-sample and per-trial randomness.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key) {
    return detail::mix64(seed + 0x9E3779B97F4A7C15ull * (key + 1));
}

} // namespace kemeny
