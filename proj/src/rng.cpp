#include "memcap/rng.hpp"

#include <stdexcept>

namespace memcap {

std::uint64_t derive_stream(std::uint64_t master_seed, std::uint64_t stream_tag,
                            std::uint64_t trial_index) {
    std::uint64_t h = mix64(master_seed ^ 0x6D656D636170ull);
    h = mix64(h ^ (kGoldenGamma * (stream_tag + 1)));
    h = mix64(h ^ (kGoldenGamma * (trial_index + 1)));
    return h;
}

std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be >= 1");
    const unsigned __int128 product = static_cast<unsigned __int128>(rng.next()) * bound;
    return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace memcap
