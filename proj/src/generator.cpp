#include "memcap/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "memcap/errors.hpp"

namespace memcap {

ProximityMatrix::ProximityMatrix(int n)
    : n_(n), grid_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    if (n < 2) throw std::invalid_argument("proximity matrix dimension must be >= 2");
}

void ProximityMatrix::set_distance(int i, int j, const Rational& distance) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) {
        throw std::invalid_argument("neuron index out of range");
    }
    if (i == j) throw std::invalid_argument("self-distances are fixed at zero");
    if (!(Rational(0) < distance)) throw std::invalid_argument("link distances must be positive");
    grid_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)] = distance;
    grid_[static_cast<std::size_t>(j) * n_ + static_cast<std::size_t>(i)] = distance;
}

std::optional<Rational> ProximityMatrix::distance(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) {
        throw std::invalid_argument("neuron index out of range");
    }
    if (i == j) return Rational(0);
    return grid_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
}

LowerTriangular split_lower(const SynapticMatrix& t) {
    LowerTriangular lower;
    lower.n = t.n();
    lower.entries.assign(static_cast<std::size_t>(t.n()) * static_cast<std::size_t>(t.n()), 0);
    for (int i = 1; i < t.n(); ++i) {
        for (int j = 0; j < i; ++j) {
            lower.entries[static_cast<std::size_t>(i) * t.n() + static_cast<std::size_t>(j)] =
                t.at(i, j);
        }
    }
    return lower;
}

ActivationSchedule arrival_order(const ProximityMatrix& d, int seed) {
    const int n = d.n();
    if (seed < 0 || seed >= n) throw std::invalid_argument("seed neuron out of range");

    // Dijkstra over the dense grid with exact rational path sums; the
    // lowest-index unsettled minimum keeps tie handling deterministic.
    std::vector<std::optional<Rational>> time(static_cast<std::size_t>(n));
    std::vector<bool> settled(static_cast<std::size_t>(n), false);
    time[static_cast<std::size_t>(seed)] = Rational(0);
    for (int step = 0; step < n; ++step) {
        int next = -1;
        for (int v = 0; v < n; ++v) {
            if (settled[static_cast<std::size_t>(v)] || !time[static_cast<std::size_t>(v)]) continue;
            if (next == -1 || *time[static_cast<std::size_t>(v)] < *time[static_cast<std::size_t>(next)]) {
                next = v;
            }
        }
        if (next == -1) break;
        settled[static_cast<std::size_t>(next)] = true;
        for (int v = 0; v < n; ++v) {
            if (settled[static_cast<std::size_t>(v)] || v == next) continue;
            const std::optional<Rational> link = d.distance(next, v);
            if (!link) continue;
            const Rational candidate = *time[static_cast<std::size_t>(next)] + *link;
            if (!time[static_cast<std::size_t>(v)] || candidate < *time[static_cast<std::size_t>(v)]) {
                time[static_cast<std::size_t>(v)] = candidate;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!time[static_cast<std::size_t>(v)]) {
            throw ConnectivityError("neuron " + std::to_string(v) + " is unreachable from seed " +
                                        std::to_string(seed),
                                    v);
        }
    }

    ActivationSchedule schedule;
    schedule.seed_neuron = seed;
    schedule.arrival_times.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) schedule.arrival_times.push_back(*time[static_cast<std::size_t>(v)]);
    schedule.order.reserve(static_cast<std::size_t>(n - 1));
    for (int v = 0; v < n; ++v) {
        if (v != seed) schedule.order.push_back(v);
    }
    std::sort(schedule.order.begin(), schedule.order.end(), [&schedule](int a, int b) {
        const Rational& ta = schedule.arrival_times[static_cast<std::size_t>(a)];
        const Rational& tb = schedule.arrival_times[static_cast<std::size_t>(b)];
        if (ta == tb) return a < b;
        return ta < tb;
    });
    return schedule;
}

RecallResult proximity_recall(const SynapticMatrix& t, const ProximityMatrix& d, int seed,
                              const BipolarPattern& probe, std::uint64_t max_rounds) {
    if (t.n() != d.n()) throw DimensionError("synaptic and proximity dimensions differ");
    ActivationSchedule schedule = arrival_order(d, seed);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(t.n()));
    order.push_back(seed);
    order.insert(order.end(), schedule.order.begin(), schedule.order.end());
    return recall(t, probe, RecallSchedule::sequential_order(std::move(order)), max_rounds);
}

}  // namespace memcap
