#pragma once

#include <cstddef>
#include <cstdint>

namespace lsb {

/// SplitMix64. Small, fast and fully determined by its 64-bit state, so a
/// stream can be keyed by (seed, d, category, trial) and rebuilt anywhere.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); bound > 0. Rejection sampling, no modulo bias.
    constexpr std::uint64_t uniform(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    constexpr bool coin() noexcept { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

/// Independent substream for one trial.
constexpr SplitMix64 substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept {
    SplitMix64 mixer(seed);
    std::uint64_t key = mixer.next();
    for (const auto part : {a, b, c}) {
        SplitMix64 step(key ^ (part * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
        key = step.next();
    }
    return SplitMix64(key);
}

}  // namespace lsb
