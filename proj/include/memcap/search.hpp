#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "memcap/enumerate.hpp"
#include "memcap/matrix.hpp"

namespace memcap {

struct SweepConfig {
    int n = 10;
    std::vector<int> weights;
    std::uint64_t trials_per_weight = 1;
    std::uint64_t master_seed = 0;
    bool allow_zero = false;
    int enum_limit = kDefaultEnumLimit;

    // weights nonempty and strictly increasing, trials >= 1, n within limits.
    void validate() const;

    bool operator==(const SweepConfig&) const = default;
};

// Outcome of best-of-N search at one weight. Ties on capacity retain the
// lowest trial index, which makes the result independent of scheduling.
// seconds is measured wall clock and is excluded from determinism checks.
struct WeightResult {
    int weight;
    std::uint64_t trials;
    std::uint64_t best_capacity;
    std::uint64_t best_trial_index;
    SynapticMatrix best_matrix;
    MemoryCensus best_census;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> capacity_histogram;  // (capacity, trials)
    std::uint64_t capacity_sum;  // mean capacity = capacity_sum / trials
    std::uint64_t max_raw_count;  // max raw fixed-point count over all trials
    double seconds;

    bool operator==(const WeightResult&) const = default;
};

struct SweepReport {
    SweepConfig config;
    std::string generator;
    std::string derivation;
    std::string draw_scheme;
    std::vector<WeightResult> results;

    bool operator==(const SweepReport&) const = default;
};

WeightResult best_of(int n, int weight, std::uint64_t trials, std::uint64_t master_seed,
                     bool allow_zero, int enum_limit = kDefaultEnumLimit);

SweepReport sweep(const SweepConfig& config);

struct SummaryRow {
    int weight;
    std::uint64_t trials;
    std::uint64_t best_capacity;
    std::uint64_t mean_num;
    std::uint64_t mean_den;
    std::uint64_t p50;
    std::uint64_t p95;
};

std::vector<SummaryRow> summarize(const SweepReport& report);

// Nearest-rank percentile over a (capacity, count) histogram: the smallest
// capacity whose cumulative count reaches ceil(q_num/q_den * total).
std::uint64_t histogram_percentile(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& histogram, std::uint64_t q_num,
    std::uint64_t q_den);

}  // namespace memcap
