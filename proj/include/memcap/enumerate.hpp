#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "memcap/matrix.hpp"

namespace memcap {

// Guard against accidental 2^n blowups; raise deliberately for large runs.
inline constexpr int kDefaultEnumLimit = 24;
// The reference enumerator is deliberately slow and capped harder.
inline constexpr int kNaiveEnumLimit = 16;

struct MemoryClass {
    BipolarPattern representative;  // canonical member: first component +1
    bool both_members_fixed;

    bool operator==(const MemoryClass&) const = default;
};

// Exhaustive fixed-point inventory of one matrix. raw_count counts fixed
// patterns; class_count counts {x, -x} pairs with at least one fixed member.
struct MemoryCensus {
    int n = 0;
    std::vector<BipolarPattern> fixed_points;  // ascending pattern index
    std::uint64_t raw_count = 0;
    std::uint64_t class_count = 0;
    std::vector<MemoryClass> classes;  // ascending representative index

    bool operator==(const MemoryCensus&) const = default;
};

// Sorted pattern indices of every fixed point; the kernel behind the census.
// Walks the 2^n space in Gray-code order with incremental field updates and
// shards the index range across threads for large n. Output order does not
// depend on the thread count.
std::vector<std::uint64_t> fixed_point_indices(const SynapticMatrix& t,
                                               int enum_limit = kDefaultEnumLimit);

MemoryCensus enumerate_memories(const SynapticMatrix& t, int enum_limit = kDefaultEnumLimit);

// Reference implementation: materializes every pattern and applies the update
// rule directly. Serial by construction; kept as the correctness oracle for
// the fast path.
MemoryCensus enumerate_memories_naive(const SynapticMatrix& t);

std::uint64_t count_unique_memories(const SynapticMatrix& t, int enum_limit = kDefaultEnumLimit);

struct CensusCounts {
    std::uint64_t raw = 0;
    std::uint64_t classes = 0;
};

CensusCounts census_counts_from_indices(int n, const std::vector<std::uint64_t>& sorted_indices);

// "raw=<r> classes=<c>" header plus one '+'/'-' line per class representative.
std::string export_census(const MemoryCensus& census);

}  // namespace memcap
