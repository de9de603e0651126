#pragma once

#include <cstdint>
#include <vector>

#include "memcap/matrix.hpp"

namespace memcap {

struct PatternSet {
    std::vector<BipolarPattern> patterns;

    explicit PatternSet(std::vector<BipolarPattern> patterns_in);

    int n() const { return patterns.front().size(); }
    int size() const { return static_cast<int>(patterns.size()); }
};

// Outer-product construction with the diagonal forced to zero. The result
// carries weight m (entries are sums of m signs) with zero allowed.
SynapticMatrix hebbian_matrix(const PatternSet& ps);

// Fraction of the set's patterns that are fixed points of the set's own
// outer-product matrix.
double stored_fraction(const PatternSet& ps);

struct RecallSchedule {
    enum class Kind { synchronous, sequential };

    Kind kind = Kind::sequential;
    std::vector<int> order;  // empty means ascending component order

    static RecallSchedule synchronous() { return {Kind::synchronous, {}}; }
    static RecallSchedule sequential() { return {Kind::sequential, {}}; }
    static RecallSchedule sequential_order(std::vector<int> order) {
        return {Kind::sequential, std::move(order)};
    }
};

struct RecallResult {
    BipolarPattern state;
    bool converged;
    std::uint64_t rounds;
};

// Iterates rounds until one changes nothing (converged) or max_rounds is
// exhausted. Sequential rounds update one component at a time using the
// freshest state; synchronous rounds update all components at once.
RecallResult recall(const SynapticMatrix& t, const BipolarPattern& probe,
                    const RecallSchedule& schedule, std::uint64_t max_rounds);

struct BaselineRow {
    int n = 0;
    int m = 0;
    double loading = 0.0;
    double stored_fraction_mean = 0.0;
    double stored_fraction_stddev = 0.0;
    std::uint64_t draws = 0;

    bool operator==(const BaselineRow&) const = default;
};

// Monte Carlo over random pattern sets: for each loading, m = round(loading*n)
// (at least 1), each draw sampled from an independent derived stream.
std::vector<BaselineRow> baseline_table(int n, const std::vector<double>& loadings,
                                        std::uint64_t draws, std::uint64_t master_seed);

}  // namespace memcap
