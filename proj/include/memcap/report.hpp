#pragma once

#include <string>
#include <variant>
#include <vector>

#include "memcap/baselines.hpp"
#include "memcap/enumerate.hpp"
#include "memcap/generator.hpp"
#include "memcap/matrix.hpp"
#include "memcap/search.hpp"

namespace memcap {

inline constexpr const char* kSchemaVersion = "1.0.0";

// Matrix text format: first line n, then n rows of n space-separated
// integers, LF endings.
std::string render_matrix(const SynapticMatrix& t);

// Infers the weight as the largest absolute entry (at least 1) and allows
// zero when any off-diagonal entry is zero.
SynapticMatrix parse_matrix(const std::string& text);
// Validates entries against a declared quantization instead of inferring.
SynapticMatrix parse_matrix(const std::string& text, const QuantizationSpec& declared);

// Proximity format: first line n, then one "i j d" line per undirected link
// with rational d > 0; unlisted pairs are unreachable.
ProximityMatrix parse_proximity(const std::string& text);

// weight,trials,best_capacity,best_raw_count,mean_capacity,p50,p95,
// best_trial_index,seconds — one row per weight. The seconds column is
// measured wall clock; determinism comparisons drop it.
std::string emit_sweep_csv(const SweepReport& report);

// n,m,loading,stored_fraction_mean,stored_fraction_stddev,draws
std::string emit_baseline_csv(const std::vector<BaselineRow>& rows);

// Structured experiment record. The timestamp is stamped at creation and is
// the only field (together with measured seconds) that varies between
// identical runs.
struct ExperimentRecord {
    std::string schema_version;
    std::string timestamp;  // ISO-8601 UTC
    std::variant<SweepReport, MemoryCensus, std::vector<BaselineRow>> payload;

    bool operator==(const ExperimentRecord&) const = default;
};

ExperimentRecord make_record(SweepReport report);
ExperimentRecord make_record(MemoryCensus census);
ExperimentRecord make_record(std::vector<BaselineRow> rows);

std::string render_record(const ExperimentRecord& record);
ExperimentRecord parse_record(const std::string& text);

// Fixed-point decimal of num/den, round half up, no locale involvement.
std::string format_ratio(std::uint64_t num, std::uint64_t den, int places);
std::string format_fixed(double value, int places);

}  // namespace memcap
