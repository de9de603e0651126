#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "memcap/baselines.hpp"
#include "memcap/matrix.hpp"
#include "memcap/rational.hpp"

namespace memcap {

// Symmetric travel-time matrix; missing entries mean no direct link.
class ProximityMatrix {
public:
    explicit ProximityMatrix(int n);

    int n() const { return n_; }
    void set_distance(int i, int j, const Rational& distance);  // distance > 0, i != j
    std::optional<Rational> distance(int i, int j) const;

private:
    int n_;
    std::vector<std::optional<Rational>> grid_;
};

// Non-seed neurons sorted by shortest-path arrival time from the seed,
// ties broken by ascending neuron index.
struct ActivationSchedule {
    int seed_neuron = 0;
    std::vector<int> order;
    std::vector<Rational> arrival_times;  // indexed by neuron; seed at 0
};

struct LowerTriangular {
    int n = 0;
    std::vector<int> entries;  // row-major

    int at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(j)];
    }
};

// Strict lower triangle of T; adding its transpose reconstructs T exactly.
LowerTriangular split_lower(const SynapticMatrix& t);

ActivationSchedule arrival_order(const ProximityMatrix& d, int seed);

// Sequential recall visiting the seed first, then neurons in arrival order.
// The proximity matrix sets the visitation order; the synaptic matrix sets
// the values, so the fixed-point set is unchanged.
RecallResult proximity_recall(const SynapticMatrix& t, const ProximityMatrix& d, int seed,
                              const BipolarPattern& probe, std::uint64_t max_rounds);

}  // namespace memcap
