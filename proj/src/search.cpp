#include "memcap/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <utility>

#include "memcap/errors.hpp"
#include "memcap/rng.hpp"
#include "memcap/sampling.hpp"

namespace memcap {

void SweepConfig::validate() const {
    if (n < 2) throw std::invalid_argument("sweep dimension must be >= 2");
    if (weights.empty()) throw std::invalid_argument("sweep needs at least one weight");
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 1) throw std::invalid_argument("weights must be positive");
        if (i > 0 && weights[i] <= weights[i - 1]) {
            throw std::invalid_argument("weights must be strictly increasing");
        }
    }
    if (trials_per_weight < 1) throw std::invalid_argument("trials_per_weight must be >= 1");
    if (n > enum_limit) {
        throw EnumerationLimitError("sweep over " + std::to_string(n) +
                                    " neurons exceeds the enumeration limit of " +
                                    std::to_string(enum_limit));
    }
}

namespace {

// Per-worker accumulator; merging partials is commutative and associative,
// so the reduced result does not depend on which worker saw which trial.
struct Partial {
    bool has_best = false;
    std::uint64_t best_capacity = 0;
    std::uint64_t best_trial = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t capacity_sum = 0;
    std::uint64_t max_raw = 0;
    std::vector<std::uint64_t> histogram;  // indexed by capacity

    void record(std::uint64_t trial, const CensusCounts& counts) {
        capacity_sum += counts.classes;
        max_raw = std::max(max_raw, counts.raw);
        if (histogram.size() <= counts.classes) histogram.resize(counts.classes + 1, 0);
        ++histogram[counts.classes];
        if (!has_best || counts.classes > best_capacity ||
            (counts.classes == best_capacity && trial < best_trial)) {
            has_best = true;
            best_capacity = counts.classes;
            best_trial = trial;
        }
    }

    void merge(const Partial& other) {
        if (other.has_best &&
            (!has_best || other.best_capacity > best_capacity ||
             (other.best_capacity == best_capacity && other.best_trial < best_trial))) {
            has_best = true;
            best_capacity = other.best_capacity;
            best_trial = other.best_trial;
        }
        capacity_sum += other.capacity_sum;
        max_raw = std::max(max_raw, other.max_raw);
        if (histogram.size() < other.histogram.size()) histogram.resize(other.histogram.size(), 0);
        for (std::size_t c = 0; c < other.histogram.size(); ++c) histogram[c] += other.histogram[c];
    }
};

}  // namespace

WeightResult best_of(int n, int weight, std::uint64_t trials, std::uint64_t master_seed,
                     bool allow_zero, int enum_limit) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const auto start = std::chrono::steady_clock::now();
    const SamplerConfig cfg(n, QuantizationSpec(weight, allow_zero), master_seed);

    // Probe the limits before entering the parallel region.
    (void)fixed_point_indices(sample_matrix(cfg, 0), enum_limit);

    Partial total;
    const std::int64_t signed_trials = static_cast<std::int64_t>(trials);
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        Partial local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64)
#endif
        for (std::int64_t i = 0; i < signed_trials; ++i) {
            const std::uint64_t trial = static_cast<std::uint64_t>(i);
            const SynapticMatrix t = sample_matrix(cfg, trial);
            const std::vector<std::uint64_t> indices = fixed_point_indices(t, enum_limit);
            local.record(trial, census_counts_from_indices(n, indices));
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        total.merge(local);
    }

    SynapticMatrix best = sample_matrix(cfg, total.best_trial);
    MemoryCensus census = enumerate_memories(best, enum_limit);

    std::vector<std::pair<std::uint64_t, std::uint64_t>> histogram;
    for (std::uint64_t c = 0; c < total.histogram.size(); ++c) {
        if (total.histogram[c] > 0) histogram.emplace_back(c, total.histogram[c]);
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return WeightResult{weight,
                        trials,
                        total.best_capacity,
                        total.best_trial,
                        std::move(best),
                        std::move(census),
                        std::move(histogram),
                        total.capacity_sum,
                        total.max_raw,
                        seconds};
}

SweepReport sweep(const SweepConfig& config) {
    config.validate();
    SweepReport report;
    report.config = config;
    report.generator = kGeneratorName;
    report.derivation = kDerivationScheme;
    report.draw_scheme = kDrawScheme;
    report.results.reserve(config.weights.size());
    for (int weight : config.weights) {
        report.results.push_back(best_of(config.n, weight, config.trials_per_weight,
                                         config.master_seed, config.allow_zero,
                                         config.enum_limit));
    }
    return report;
}

std::uint64_t histogram_percentile(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& histogram, std::uint64_t q_num,
    std::uint64_t q_den) {
    if (histogram.empty() || q_num == 0 || q_den == 0 || q_num > q_den) {
        throw std::invalid_argument("percentile needs a nonempty histogram and q in (0, 1]");
    }
    unsigned __int128 total = 0;
    for (const auto& [capacity, count] : histogram) total += count;
    const unsigned __int128 rank = (static_cast<unsigned __int128>(q_num) * total + q_den - 1) / q_den;
    unsigned __int128 cumulative = 0;
    for (const auto& [capacity, count] : histogram) {
        cumulative += count;
        if (cumulative >= rank) return capacity;
    }
    return histogram.back().first;
}

std::vector<SummaryRow> summarize(const SweepReport& report) {
    std::vector<SummaryRow> rows;
    rows.reserve(report.results.size());
    for (const WeightResult& r : report.results) {
        rows.push_back({r.weight, r.trials, r.best_capacity, r.capacity_sum, r.trials,
                        histogram_percentile(r.capacity_histogram, 1, 2),
                        histogram_percentile(r.capacity_histogram, 19, 20)});
    }
    return rows;
}

}  // namespace memcap
