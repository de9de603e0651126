#include "memcap/sampling.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace memcap {

SamplerConfig::SamplerConfig(int n_in, QuantizationSpec spec_in, std::uint64_t master_seed_in)
    : n(n_in), spec(spec_in), master_seed(master_seed_in) {
    if (n < 2) throw std::invalid_argument("sampler dimension must be >= 2");
}

SynapticMatrix sample_matrix(const SamplerConfig& cfg, std::uint64_t trial_index) {
    SplitMix64 rng(derive_stream(cfg.master_seed, static_cast<std::uint64_t>(cfg.spec.weight()),
                                 trial_index));
    const int n = cfg.n;
    const std::uint64_t levels = static_cast<std::uint64_t>(cfg.spec.level_count());
    std::vector<int> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int value = cfg.spec.level_value(static_cast<int>(uniform_below(rng, levels)));
            entries[static_cast<std::size_t>(i) * n + j] = value;
            entries[static_cast<std::size_t>(j) * n + i] = value;
        }
    }
    return SynapticMatrix(n, cfg.spec, std::move(entries));
}

BipolarPattern sample_pattern(SplitMix64& rng, int n) {
    std::vector<std::int8_t> signs(static_cast<std::size_t>(n));
    std::uint64_t word = 0;
    for (int j = 0; j < n; ++j) {
        if (j % 64 == 0) word = rng.next();
        signs[static_cast<std::size_t>(j)] = (word >> (j % 64)) & 1 ? -1 : 1;
    }
    return BipolarPattern(std::move(signs));
}

}  // namespace memcap
