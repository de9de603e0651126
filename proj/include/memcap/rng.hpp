#pragma once

#include <cstdint>

namespace memcap {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// splitmix64: counter state advanced by the golden gamma, mix64 output.
// Fixed algorithm, identical word stream on every platform.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

private:
    std::uint64_t state_;
};

// Per-(tag, trial) stream seed:
//   h = mix64(master ^ 0x6D656D636170)
//   h = mix64(h ^ kGoldenGamma * (tag + 1))
//   h = mix64(h ^ kGoldenGamma * (trial + 1))
// Injective in trial for a fixed (master, tag), and streams with different
// tags never collide at the same trial index. Capacity sweeps use the weight
// as the tag; the baseline command uses the loading's position in its list.
std::uint64_t derive_stream(std::uint64_t master_seed, std::uint64_t stream_tag,
                            std::uint64_t trial_index);

// Uniform draw in [0, bound) by 128-bit multiply-shift; bound >= 1. No
// rejection loop: one generator word per draw.
std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t bound);

// Provenance strings recorded in reports.
inline constexpr const char* kGeneratorName = "splitmix64";
inline constexpr const char* kDerivationScheme =
    "mix64(mix64(mix64(master^0x6D656D636170) ^ 0x9E3779B97F4A7C15*(tag+1)) ^ "
    "0x9E3779B97F4A7C15*(trial+1))";
inline constexpr const char* kDrawScheme =
    "multiply-shift over the value set enumerated in ascending order";

}  // namespace memcap
