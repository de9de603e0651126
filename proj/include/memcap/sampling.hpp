#pragma once

#include <cstdint>

#include "memcap/matrix.hpp"
#include "memcap/rng.hpp"

namespace memcap {

struct SamplerConfig {
    int n;
    QuantizationSpec spec;
    std::uint64_t master_seed;

    SamplerConfig(int n, QuantizationSpec spec, std::uint64_t master_seed);
};

// Pure function of (cfg, trial_index): the strict upper triangle is drawn
// uniformly from the value set in row-major order, mirrored to the lower
// triangle, diagonal zero. Identical output on any platform or thread count.
SynapticMatrix sample_matrix(const SamplerConfig& cfg, std::uint64_t trial_index);

// Uniform pattern: one generator word per 64 components, bit j -> sign of
// component j (set bit means -1).
BipolarPattern sample_pattern(SplitMix64& rng, int n);

}  // namespace memcap
