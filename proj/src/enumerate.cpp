#include "memcap/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "memcap/errors.hpp"

namespace memcap {
namespace {

void check_enum_limit(int n, int enum_limit) {
    if (n > enum_limit) {
        throw EnumerationLimitError("enumeration over " + std::to_string(n) +
                                    " neurons exceeds the limit of " + std::to_string(enum_limit) +
                                    " (raise the limit for a deliberate 2^n run)");
    }
    if (n > 63) throw EnumerationLimitError("enumeration is capped at 63 neurons");
}

// Visits patterns g(k) = k ^ (k >> 1) for k in [begin, end); consecutive
// steps flip exactly one component, so the field updates in O(n).
void scan_gray_range(const SynapticMatrix& t, std::uint64_t begin, std::uint64_t end,
                     std::vector<std::uint64_t>& out) {
    const int n = t.n();
    std::uint64_t gray = begin ^ (begin >> 1);
    std::vector<std::int8_t> x(static_cast<std::size_t>(n));
    std::vector<std::int64_t> h(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = (gray >> j) & 1 ? -1 : 1;
    for (int i = 0; i < n; ++i) {
        const int* row = t.row(i);
        std::int64_t sum = 0;
        for (int j = 0; j < n; ++j) sum += static_cast<std::int64_t>(row[j]) * x[static_cast<std::size_t>(j)];
        h[static_cast<std::size_t>(i)] = sum;
    }

    for (std::uint64_t k = begin; k < end; ++k) {
        bool fixed = true;
        for (int i = 0; i < n; ++i) {
            if ((h[static_cast<std::size_t>(i)] >= 0) != (x[static_cast<std::size_t>(i)] > 0)) {
                fixed = false;
                break;
            }
        }
        if (fixed) out.push_back(gray);

        const std::uint64_t next = k + 1;
        if (next == end) break;
        const int j = std::countr_zero(next);
        // Zero diagonal keeps h[j] independent of x[j]; one loop serves all rows.
        const std::int64_t delta = -2 * static_cast<std::int64_t>(x[static_cast<std::size_t>(j)]);
        const int* col = t.row(j);  // symmetric: row j doubles as column j
        for (int i = 0; i < n; ++i) h[static_cast<std::size_t>(i)] += delta * col[i];
        x[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(-x[static_cast<std::size_t>(j)]);
        gray ^= std::uint64_t{1} << j;
    }
}

MemoryCensus census_from_indices(int n, const std::vector<std::uint64_t>& indices) {
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    MemoryCensus census;
    census.n = n;
    census.raw_count = indices.size();
    census.fixed_points.reserve(indices.size());
    for (std::uint64_t k : indices) census.fixed_points.push_back(BipolarPattern::from_index(n, k));

    // bit 0: member with first component +1 is fixed; bit 1: its negation is.
    std::map<std::uint64_t, unsigned> members;
    for (std::uint64_t k : indices) {
        if (k & 1) {
            members[k ^ mask] |= 2u;
        } else {
            members[k] |= 1u;
        }
    }
    census.class_count = members.size();
    census.classes.reserve(members.size());
    for (const auto& [rep, flags] : members) {
        census.classes.push_back({BipolarPattern::from_index(n, rep), flags == 3u});
    }
    return census;
}

}  // namespace

std::vector<std::uint64_t> fixed_point_indices(const SynapticMatrix& t, int enum_limit) {
    check_enum_limit(t.n(), enum_limit);
    const std::uint64_t total = std::uint64_t{1} << t.n();

    int shards = 1;
#ifdef _OPENMP
    if (total >= (std::uint64_t{1} << 15)) {
        const std::uint64_t max_useful = total >> 12;  // keep shards >= 4096 patterns
        const std::uint64_t wanted = static_cast<std::uint64_t>(omp_get_max_threads()) * 8;
        shards = static_cast<int>(std::min(wanted, max_useful));
        if (shards < 1) shards = 1;
    }
#endif

    std::vector<std::uint64_t> found;
    if (shards == 1) {
        scan_gray_range(t, 0, total, found);
    } else {
        std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(shards));
        const std::uint64_t base = total / static_cast<std::uint64_t>(shards);
        const std::uint64_t rem = total % static_cast<std::uint64_t>(shards);
        const auto range_begin = [base, rem](int s) {
            const std::uint64_t u = static_cast<std::uint64_t>(s);
            return base * u + std::min(u, rem);
        };
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int s = 0; s < shards; ++s) {
            scan_gray_range(t, range_begin(s), range_begin(s + 1), parts[static_cast<std::size_t>(s)]);
        }
        for (const auto& part : parts) found.insert(found.end(), part.begin(), part.end());
    }
    std::sort(found.begin(), found.end());
    return found;
}

MemoryCensus enumerate_memories(const SynapticMatrix& t, int enum_limit) {
    return census_from_indices(t.n(), fixed_point_indices(t, enum_limit));
}

MemoryCensus enumerate_memories_naive(const SynapticMatrix& t) {
    check_enum_limit(t.n(), kNaiveEnumLimit);
    const int n = t.n();
    const std::uint64_t total = std::uint64_t{1} << n;

    MemoryCensus census;
    census.n = n;
    for (std::uint64_t k = 0; k < total; ++k) {
        const BipolarPattern x = BipolarPattern::from_index(n, k);
        if (update(t, x) == x) census.fixed_points.push_back(x);
    }
    census.raw_count = census.fixed_points.size();

    std::map<std::uint64_t, unsigned> members;
    for (const BipolarPattern& x : census.fixed_points) {
        const BipolarPattern rep = x.canonical();
        members[rep.index()] |= (x == rep) ? 1u : 2u;
    }
    census.class_count = members.size();
    for (const auto& [rep, flags] : members) {
        census.classes.push_back({BipolarPattern::from_index(n, rep), flags == 3u});
    }
    return census;
}

std::uint64_t count_unique_memories(const SynapticMatrix& t, int enum_limit) {
    return census_counts_from_indices(t.n(), fixed_point_indices(t, enum_limit)).classes;
}

CensusCounts census_counts_from_indices(int n, const std::vector<std::uint64_t>& sorted_indices) {
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    CensusCounts counts;
    counts.raw = sorted_indices.size();
    for (std::uint64_t k : sorted_indices) {
        if ((k & 1) == 0) {
            ++counts.classes;  // canonical member fixed
        } else if (!std::binary_search(sorted_indices.begin(), sorted_indices.end(), k ^ mask)) {
            ++counts.classes;  // only the negated member is fixed
        }
    }
    return counts;
}

std::string export_census(const MemoryCensus& census) {
    std::string text = "raw=" + std::to_string(census.raw_count) +
                       " classes=" + std::to_string(census.class_count) + "\n";
    for (const MemoryClass& cls : census.classes) {
        text += cls.representative.to_string();
        text += '\n';
    }
    return text;
}

}  // namespace memcap
