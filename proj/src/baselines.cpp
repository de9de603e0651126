#include "memcap/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "memcap/errors.hpp"
#include "memcap/rng.hpp"
#include "memcap/sampling.hpp"

namespace memcap {

PatternSet::PatternSet(std::vector<BipolarPattern> patterns_in) : patterns(std::move(patterns_in)) {
    if (patterns.empty()) throw std::invalid_argument("pattern set needs at least one pattern");
    for (const BipolarPattern& p : patterns) {
        if (p.size() != patterns.front().size()) {
            throw DimensionError("pattern set dimensions differ");
        }
    }
}

SynapticMatrix hebbian_matrix(const PatternSet& ps) {
    const int n = ps.n();
    std::vector<int> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const BipolarPattern& p : ps.patterns) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const int term = p.sign(i) * p.sign(j);
                entries[static_cast<std::size_t>(i) * n + j] += term;
                entries[static_cast<std::size_t>(j) * n + i] += term;
            }
        }
    }
    return SynapticMatrix(n, QuantizationSpec(ps.size(), /*allow_zero=*/true), std::move(entries));
}

double stored_fraction(const PatternSet& ps) {
    const SynapticMatrix t = hebbian_matrix(ps);
    int stored = 0;
    for (const BipolarPattern& p : ps.patterns) {
        if (is_memory(t, p)) ++stored;
    }
    return static_cast<double>(stored) / static_cast<double>(ps.size());
}

namespace {

std::vector<int> schedule_order(const RecallSchedule& schedule, int n) {
    if (schedule.order.empty()) {
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
        return order;
    }
    if (static_cast<int>(schedule.order.size()) != n) {
        throw std::invalid_argument("sequential order must visit every component exactly once");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i : schedule.order) {
        if (i < 0 || i >= n || seen[static_cast<std::size_t>(i)]) {
            throw std::invalid_argument("sequential order must be a permutation of the components");
        }
        seen[static_cast<std::size_t>(i)] = true;
    }
    return schedule.order;
}

}  // namespace

RecallResult recall(const SynapticMatrix& t, const BipolarPattern& probe,
                    const RecallSchedule& schedule, std::uint64_t max_rounds) {
    if (t.n() != probe.size()) throw DimensionError("matrix and probe dimensions differ");
    if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");

    if (schedule.kind == RecallSchedule::Kind::synchronous) {
        BipolarPattern state = probe;
        for (std::uint64_t round = 1; round <= max_rounds; ++round) {
            BipolarPattern next = update(t, state);
            if (next == state) return {std::move(state), true, round};
            state = std::move(next);
        }
        return {std::move(state), false, max_rounds};
    }

    const std::vector<int> order = schedule_order(schedule, t.n());
    const int n = t.n();
    std::vector<std::int8_t> state = probe.signs();
    for (std::uint64_t round = 1; round <= max_rounds; ++round) {
        bool changed = false;
        for (int j : order) {
            const int* row = t.row(j);
            std::int64_t field = 0;
            for (int k = 0; k < n; ++k) {
                field += static_cast<std::int64_t>(row[k]) * state[static_cast<std::size_t>(k)];
            }
            const std::int8_t sign = static_cast<std::int8_t>(sgn(field));
            if (sign != state[static_cast<std::size_t>(j)]) {
                state[static_cast<std::size_t>(j)] = sign;
                changed = true;
            }
        }
        if (!changed) return {BipolarPattern(std::move(state)), true, round};
    }
    return {BipolarPattern(std::move(state)), false, max_rounds};
}

std::vector<BaselineRow> baseline_table(int n, const std::vector<double>& loadings,
                                        std::uint64_t draws, std::uint64_t master_seed) {
    if (n < 2) throw std::invalid_argument("baseline dimension must be >= 2");
    if (loadings.empty()) throw std::invalid_argument("baseline needs at least one loading");
    if (draws < 1) throw std::invalid_argument("draws must be >= 1");

    std::vector<BaselineRow> rows;
    rows.reserve(loadings.size());
    for (std::size_t li = 0; li < loadings.size(); ++li) {
        const double loading = loadings[li];
        if (!(loading > 0.0)) throw std::invalid_argument("loadings must be positive");
        const int m = std::max(1, static_cast<int>(std::llround(loading * n)));

        double sum = 0.0;
        double sum_sq = 0.0;
        for (std::uint64_t d = 0; d < draws; ++d) {
            SplitMix64 rng(derive_stream(master_seed, li, d));
            std::vector<BipolarPattern> patterns;
            patterns.reserve(static_cast<std::size_t>(m));
            for (int k = 0; k < m; ++k) patterns.push_back(sample_pattern(rng, n));
            const double fraction = stored_fraction(PatternSet(std::move(patterns)));
            sum += fraction;
            sum_sq += fraction * fraction;
        }
        const double mean = sum / static_cast<double>(draws);
        double variance = 0.0;
        if (draws > 1) {
            variance = (sum_sq - sum * sum / static_cast<double>(draws)) /
                       static_cast<double>(draws - 1);
            variance = std::max(variance, 0.0);
        }
        rows.push_back({n, m, loading, mean, std::sqrt(variance), draws});
    }
    return rows;
}

}  // namespace memcap
