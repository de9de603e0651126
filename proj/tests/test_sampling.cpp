#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "memcap/rng.hpp"
#include "memcap/sampling.hpp"

using namespace memcap;

TEST_CASE("derived streams are deterministic and mirror the documented mixing") {
    CHECK(derive_stream(1, 2, 3) == derive_stream(1, 2, 3));

    // recompute the documented chain independently
    const auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    };
    for (const auto& [master, tag, trial] :
         std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>>{
             {0, 0, 0}, {1, 2, 3}, {0xDEADBEEF, 16, 99999}}) {
        std::uint64_t h = mix(master ^ 0x6D656D636170ull);
        h = mix(h ^ (0x9E3779B97F4A7C15ull * (tag + 1)));
        h = mix(h ^ (0x9E3779B97F4A7C15ull * (trial + 1)));
        CHECK(derive_stream(master, tag, trial) == h);
    }
}

TEST_CASE("stream derivation has no collisions over a million trials") {
    const std::uint64_t master = 42;
    std::vector<std::uint64_t> seeds;
    seeds.reserve(1000000);
    for (std::uint64_t i = 0; i < 1000000; ++i) seeds.push_back(derive_stream(master, 1, i));
    std::vector<std::uint64_t> sorted = seeds;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

    // neighbouring weights never share a seed at the same trial
    for (std::uint64_t i = 0; i < 1000000; ++i) {
        if (seeds[i] == derive_stream(master, 2, i)) {
            FAIL("tag collision at trial ", i);
        }
    }
}

TEST_CASE("sampled matrices satisfy the structural invariants") {
    const SamplerConfig cfg(10, QuantizationSpec(1), 7);
    for (int trial = 0; trial < 50; ++trial) {
        const SynapticMatrix t = sample_matrix(cfg, static_cast<std::uint64_t>(trial));
        for (int i = 0; i < 10; ++i) {
            CHECK(t.at(i, i) == 0);
            for (int j = i + 1; j < 10; ++j) {
                CHECK(t.at(i, j) == t.at(j, i));
                CHECK((t.at(i, j) == 1 || t.at(i, j) == -1));
            }
        }
    }
}

TEST_CASE("sampling is a pure function of config and trial") {
    const SamplerConfig cfg(8, QuantizationSpec(3), 123);
    CHECK(sample_matrix(cfg, 17) == sample_matrix(cfg, 17));
    int distinct = 0;
    const SynapticMatrix first = sample_matrix(cfg, 0);
    for (std::uint64_t trial = 1; trial <= 10; ++trial) {
        if (!(sample_matrix(cfg, trial) == first)) ++distinct;
    }
    CHECK(distinct == 10);
}

TEST_CASE("weight-3 levels appear uniformly") {
    // pooled upper-triangle draws across 100000 trials of a 10x10 sampler:
    // each of the 6 levels within 5 binomial standard errors of 1/6
    const SamplerConfig cfg(10, QuantizationSpec(3), 2024);
    std::vector<std::int64_t> counts(7, 0);  // value + 3 -> slot, skipping 0
    std::int64_t total = 0;
    for (std::uint64_t trial = 0; trial < 100000; ++trial) {
        const SynapticMatrix t = sample_matrix(cfg, trial);
        for (int i = 0; i < 10; ++i) {
            for (int j = i + 1; j < 10; ++j) {
                ++counts[static_cast<std::size_t>(t.at(i, j) + 3)];
                ++total;
            }
        }
    }
    CHECK(counts[3] == 0);  // zero excluded without allow_zero
    const double p = 1.0 / 6.0;
    const double se = std::sqrt(p * (1 - p) / static_cast<double>(total));
    for (const int value : {-3, -2, -1, 1, 2, 3}) {
        const double freq =
            static_cast<double>(counts[static_cast<std::size_t>(value + 3)]) / static_cast<double>(total);
        CHECK(std::abs(freq - p) < 5 * se);
    }
}

TEST_CASE("weight-1 entries are mean-zero and pairwise uncorrelated") {
    const SamplerConfig cfg(10, QuantizationSpec(1), 555);
    std::int64_t sum = 0;
    std::int64_t pair_product = 0;
    const std::int64_t trials = 100000;
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        const SynapticMatrix t = sample_matrix(cfg, static_cast<std::uint64_t>(trial));
        for (int i = 0; i < 10; ++i) {
            for (int j = i + 1; j < 10; ++j) sum += t.at(i, j);
        }
        pair_product += t.at(0, 1) * t.at(2, 3);
    }
    const std::int64_t draws = trials * 45;
    CHECK(std::abs(static_cast<double>(sum)) < 5 * std::sqrt(static_cast<double>(draws)));
    CHECK(std::abs(static_cast<double>(pair_product)) < 5 * std::sqrt(static_cast<double>(trials)));
}

TEST_CASE("allow_zero widens the sampled value set") {
    const SamplerConfig cfg(10, QuantizationSpec(1, true), 999);
    std::int64_t zeros = 0;
    std::int64_t total = 0;
    for (std::uint64_t trial = 0; trial < 20000; ++trial) {
        const SynapticMatrix t = sample_matrix(cfg, trial);
        for (int i = 0; i < 10; ++i) {
            for (int j = i + 1; j < 10; ++j) {
                CHECK((t.at(i, j) >= -1 && t.at(i, j) <= 1));
                zeros += t.at(i, j) == 0;
                ++total;
            }
        }
    }
    const double freq = static_cast<double>(zeros) / static_cast<double>(total);
    const double p = 1.0 / 3.0;
    CHECK(std::abs(freq - p) < 5 * std::sqrt(p * (1 - p) / static_cast<double>(total)));
}

TEST_CASE("pattern sampling crosses word boundaries") {
    SplitMix64 rng(31);
    const BipolarPattern x = sample_pattern(rng, 70);
    CHECK(x.size() == 70);
    SplitMix64 rng2(31);
    CHECK(sample_pattern(rng2, 70) == x);
}

TEST_CASE("bounded draws stay in range") {
    SplitMix64 rng(77);
    for (int i = 0; i < 1000; ++i) {
        CHECK(uniform_below(rng, 6) < 6);
    }
    CHECK_THROWS_AS(uniform_below(rng, 0), std::invalid_argument);
}
