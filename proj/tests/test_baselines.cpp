#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "memcap/baselines.hpp"
#include "memcap/errors.hpp"
#include "memcap/rng.hpp"
#include "memcap/sampling.hpp"

using namespace memcap;

namespace {

BipolarPattern pat(const std::string& s) { return BipolarPattern::from_string(s); }

PatternSet random_set(std::uint64_t seed, int n, int m) {
    SplitMix64 rng(seed);
    std::vector<BipolarPattern> patterns;
    patterns.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) patterns.push_back(sample_pattern(rng, n));
    return PatternSet(std::move(patterns));
}

}  // namespace

TEST_CASE("pattern set validation") {
    CHECK_THROWS_AS(PatternSet({}), std::invalid_argument);
    CHECK_THROWS_AS(PatternSet({pat("++"), pat("+++")}), DimensionError);
    CHECK(PatternSet({pat("++-")}).n() == 3);
}

TEST_CASE("single stored pattern amplifies itself") {
    SplitMix64 rng(8);
    const BipolarPattern x = sample_pattern(rng, 10);
    const PatternSet ps({x});
    const SynapticMatrix t = hebbian_matrix(ps);
    const LocalField field = local_field(t, x);
    for (int i = 0; i < 10; ++i) CHECK(field.values[static_cast<std::size_t>(i)] == 9 * x.sign(i));
    CHECK(is_memory(t, x));
    CHECK(stored_fraction(ps) == 1.0);
}

TEST_CASE("two orthogonal patterns are both stored") {
    const BipolarPattern a = pat("++++");
    const BipolarPattern b = pat("++--");
    const SynapticMatrix t = hebbian_matrix(PatternSet({a, b}));
    // outer-product sums computed by hand
    CHECK(t.at(0, 1) == 2);
    CHECK(t.at(0, 2) == 0);
    CHECK(t.at(0, 3) == 0);
    CHECK(t.at(1, 2) == 0);
    CHECK(t.at(1, 3) == 0);
    CHECK(t.at(2, 3) == 2);
    CHECK(is_memory(t, a));
    CHECK(is_memory(t, b));
    CHECK(stored_fraction(PatternSet({a, b})) == 1.0);
}

TEST_CASE("outer-product matrices are symmetric with zero diagonal") {
    for (std::uint64_t seed : {1, 2, 3}) {
        const PatternSet ps = random_set(seed, 12, 4);
        const SynapticMatrix t = hebbian_matrix(ps);
        CHECK(t.spec().weight() == 4);
        CHECK(t.spec().allow_zero());
        for (int i = 0; i < 12; ++i) {
            CHECK(t.at(i, i) == 0);
            for (int j = 0; j < 12; ++j) {
                CHECK(t.at(i, j) == t.at(j, i));
                CHECK(t.at(i, j) >= -4);
                CHECK(t.at(i, j) <= 4);
            }
        }
    }
}

TEST_CASE("duplicated pattern stays stored") {
    SplitMix64 rng(9);
    const BipolarPattern x = sample_pattern(rng, 8);
    CHECK(stored_fraction(PatternSet({x, x})) == 1.0);
}

TEST_CASE("light loading keeps nearly everything stored") {
    // n=64, m=4 (loading 0.0625): average stored fraction over 200 draws
    double sum = 0.0;
    for (std::uint64_t draw = 0; draw < 200; ++draw) {
        sum += stored_fraction(random_set(derive_stream(404, 0, draw), 64, 4));
    }
    CHECK(sum / 200.0 >= 0.95);
}

TEST_CASE("stored inversions follow nonzero fields") {
    for (std::uint64_t seed : {5, 6, 7}) {
        const PatternSet ps = random_set(seed, 16, 3);
        const SynapticMatrix t = hebbian_matrix(ps);
        for (const BipolarPattern& x : ps.patterns) {
            if (!is_memory(t, x)) continue;
            bool zero_field = false;
            for (const std::int64_t v : local_field(t, x).values) {
                if (v == 0) zero_field = true;
            }
            if (!zero_field) CHECK(is_memory(t, x.negated()));
        }
    }
}

TEST_CASE("recall returns fixed probes unchanged in one round") {
    SplitMix64 rng(10);
    const BipolarPattern x = sample_pattern(rng, 10);
    const SynapticMatrix t = hebbian_matrix(PatternSet({x}));
    for (const RecallSchedule& schedule :
         {RecallSchedule::synchronous(), RecallSchedule::sequential()}) {
        const RecallResult r = recall(t, x, schedule, 16);
        CHECK(r.state == x);
        CHECK(r.converged);
        CHECK(r.rounds == 1);
    }
}

TEST_CASE("one flipped component is repaired") {
    SplitMix64 rng(11);
    const BipolarPattern x = sample_pattern(rng, 10);
    const SynapticMatrix t = hebbian_matrix(PatternSet({x}));
    std::vector<std::int8_t> damaged = x.signs();
    damaged[0] = static_cast<std::int8_t>(-damaged[0]);
    const RecallResult r = recall(t, BipolarPattern(damaged), RecallSchedule::sequential(), 16);
    CHECK(r.converged);
    CHECK(r.state == x);
}

TEST_CASE("zero matrix recalls the all-+1 state") {
    const RecallResult r =
        recall(SynapticMatrix::zero(6), pat("-+-+-+"), RecallSchedule::synchronous(), 8);
    CHECK(r.converged);
    CHECK(r.state == BipolarPattern::from_index(6, 0));
}

TEST_CASE("synchronous updates can cycle, sequential ones cannot") {
    const SynapticMatrix t(2, QuantizationSpec(1), {0, -1, -1, 0});
    const RecallResult sync = recall(t, pat("++"), RecallSchedule::synchronous(), 10);
    CHECK(!sync.converged);
    CHECK(sync.rounds == 10);

    const RecallResult seq = recall(t, pat("++"), RecallSchedule::sequential(), 10);
    CHECK(seq.converged);
    CHECK(is_memory(t, seq.state));
}

TEST_CASE("sequential recall always converges on random nets") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        const SamplerConfig cfg(8, QuantizationSpec(1), 0xAB);
        const SynapticMatrix t = sample_matrix(cfg, i);
        SplitMix64 rng(derive_stream(0xAB, 9, i));
        const RecallResult r = recall(t, sample_pattern(rng, 8), RecallSchedule::sequential(), 256);
        CHECK(r.converged);
        CHECK(is_memory(t, r.state));
    }
}

TEST_CASE("custom orders must be permutations") {
    const SynapticMatrix t = SynapticMatrix::zero(3);
    CHECK_THROWS_AS(recall(t, pat("+-+"), RecallSchedule::sequential_order({0, 1}), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(recall(t, pat("+-+"), RecallSchedule::sequential_order({0, 1, 1}), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(recall(t, pat("+-+"), RecallSchedule::sequential_order({0, 1, 3}), 4),
                    std::invalid_argument);
    CHECK_NOTHROW(recall(t, pat("+-+"), RecallSchedule::sequential_order({2, 0, 1}), 4));
    CHECK_THROWS_AS(recall(t, pat("+-+-"), RecallSchedule::sequential(), 4), DimensionError);
    CHECK_THROWS_AS(recall(t, pat("+-+"), RecallSchedule::sequential(), 0), std::invalid_argument);
}

TEST_CASE("baseline table brackets the storage collapse") {
    const std::vector<BaselineRow> rows = baseline_table(64, {0.0625, 0.25}, 60, 0xFACE);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].m == 4);
    CHECK(rows[1].m == 16);
    CHECK(rows[0].stored_fraction_mean >= 0.95);
    CHECK(rows[1].stored_fraction_mean <= 0.5);
    CHECK(rows[0].draws == 60);
    CHECK(rows[0].stored_fraction_stddev >= 0.0);

    CHECK_THROWS_AS(baseline_table(64, {}, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(baseline_table(64, {0.5}, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(baseline_table(64, {-0.5}, 10, 0), std::invalid_argument);
}

TEST_CASE("baseline rows round the pattern count") {
    const std::vector<BaselineRow> rows = baseline_table(10, {0.01, 0.26}, 2, 1);
    CHECK(rows[0].m == 1);  // floor at one pattern
    CHECK(rows[1].m == 3);  // 2.6 rounds up
}
