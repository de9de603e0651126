#include "memcap/report.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "memcap/errors.hpp"
#include "memcap/rng.hpp"

namespace memcap {

using nlohmann::json;

namespace {

struct Line {
    std::string text;
    int number;  // 1-based
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::string current;
    int number = 1;
    for (char c : text) {
        if (c == '\n') {
            if (!current.empty() && current.back() == '\r') current.pop_back();
            lines.push_back({std::move(current), number});
            current.clear();
            ++number;
        } else {
            current += c;
        }
    }
    if (!current.empty()) {
        if (current.back() == '\r') current.pop_back();
        lines.push_back({std::move(current), number});
    }
    return lines;
}

bool blank(const std::string& s) {
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) tokens.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

long long parse_integer_token(const std::string& token, int line_no) {
    std::size_t start = 0;
    if (!token.empty() && (token[0] == '+' || token[0] == '-')) start = 1;
    if (start == token.size()) throw ParseError("malformed token '" + token + "'", line_no);
    for (std::size_t i = start; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9') {
            throw ParseError("malformed token '" + token + "'", line_no);
        }
    }
    errno = 0;
    const long long value = std::strtoll(token.c_str(), nullptr, 10);
    if (errno != 0) throw ParseError("token '" + token + "' out of range", line_no);
    return value;
}

SynapticMatrix parse_matrix_impl(const std::string& text, const QuantizationSpec* declared) {
    const std::vector<Line> lines = split_lines(text);
    std::size_t cursor = 0;
    while (cursor < lines.size() && blank(lines[cursor].text)) ++cursor;
    if (cursor == lines.size()) throw ParseError("empty matrix text");

    const std::vector<std::string> header = tokenize(lines[cursor].text);
    if (header.size() != 1) {
        throw ParseError("first line must hold the dimension alone", lines[cursor].number);
    }
    const long long n_ll = parse_integer_token(header[0], lines[cursor].number);
    if (n_ll < 2 || n_ll > 10000) throw ParseError("dimension out of range", lines[cursor].number);
    const int n = static_cast<int>(n_ll);
    ++cursor;

    std::vector<int> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::vector<int> row_line(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (cursor >= lines.size()) throw ParseError("expected " + std::to_string(n) + " rows");
        const Line& line = lines[cursor];
        const std::vector<std::string> tokens = tokenize(line.text);
        if (static_cast<int>(tokens.size()) != n) {
            throw ParseError("expected " + std::to_string(n) + " entries, got " +
                                 std::to_string(tokens.size()),
                             line.number);
        }
        for (int j = 0; j < n; ++j) {
            const long long value = parse_integer_token(tokens[static_cast<std::size_t>(j)], line.number);
            if (value > std::numeric_limits<int>::max() || value < std::numeric_limits<int>::min()) {
                throw ParseError("entry out of range", line.number);
            }
            entries[static_cast<std::size_t>(i) * n + j] = static_cast<int>(value);
        }
        row_line[static_cast<std::size_t>(i)] = line.number;
        ++cursor;
    }
    for (; cursor < lines.size(); ++cursor) {
        if (!blank(lines[cursor].text)) {
            throw ParseError("unexpected content after the matrix", lines[cursor].number);
        }
    }

    for (int i = 0; i < n; ++i) {
        if (entries[static_cast<std::size_t>(i) * n + i] != 0) {
            throw ParseError("nonzero diagonal at " + std::to_string(i),
                             row_line[static_cast<std::size_t>(i)]);
        }
    }
    int max_abs = 0;
    bool has_zero = false;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int a = entries[static_cast<std::size_t>(i) * n + j];
            const int b = entries[static_cast<std::size_t>(j) * n + i];
            if (a != b) {
                throw ParseError("asymmetric entries at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") and (" + std::to_string(j) + "," +
                                     std::to_string(i) + ")",
                                 row_line[static_cast<std::size_t>(j)]);
            }
            if (a == 0) has_zero = true;
            max_abs = std::max(max_abs, a < 0 ? -a : a);
        }
    }

    QuantizationSpec spec = declared != nullptr
                                ? *declared
                                : QuantizationSpec(std::max(1, max_abs), has_zero);
    if (declared != nullptr) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const int v = entries[static_cast<std::size_t>(i) * n + j];
                if (!spec.contains(v)) {
                    throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") = " + std::to_string(v) +
                                         " outside the declared weight-" +
                                         std::to_string(spec.weight()) + " value set",
                                     row_line[static_cast<std::size_t>(j)]);
                }
            }
        }
    }
    return SynapticMatrix(n, spec, std::move(entries));
}

}  // namespace

std::string render_matrix(const SynapticMatrix& t) {
    std::string text = std::to_string(t.n());
    text += '\n';
    for (int i = 0; i < t.n(); ++i) {
        for (int j = 0; j < t.n(); ++j) {
            if (j > 0) text += ' ';
            text += std::to_string(t.at(i, j));
        }
        text += '\n';
    }
    return text;
}

SynapticMatrix parse_matrix(const std::string& text) { return parse_matrix_impl(text, nullptr); }

SynapticMatrix parse_matrix(const std::string& text, const QuantizationSpec& declared) {
    return parse_matrix_impl(text, &declared);
}

ProximityMatrix parse_proximity(const std::string& text) {
    const std::vector<Line> lines = split_lines(text);
    std::size_t cursor = 0;
    while (cursor < lines.size() && blank(lines[cursor].text)) ++cursor;
    if (cursor == lines.size()) throw ParseError("empty proximity text");

    const std::vector<std::string> header = tokenize(lines[cursor].text);
    if (header.size() != 1) {
        throw ParseError("first line must hold the dimension alone", lines[cursor].number);
    }
    const long long n_ll = parse_integer_token(header[0], lines[cursor].number);
    if (n_ll < 2 || n_ll > 10000) throw ParseError("dimension out of range", lines[cursor].number);
    ProximityMatrix d(static_cast<int>(n_ll));
    ++cursor;

    for (; cursor < lines.size(); ++cursor) {
        const Line& line = lines[cursor];
        if (blank(line.text)) continue;
        const std::vector<std::string> tokens = tokenize(line.text);
        if (tokens.size() != 3) {
            throw ParseError("expected 'i j d', got " + std::to_string(tokens.size()) + " tokens",
                             line.number);
        }
        const long long i = parse_integer_token(tokens[0], line.number);
        const long long j = parse_integer_token(tokens[1], line.number);
        if (i < 0 || i >= d.n() || j < 0 || j >= d.n()) {
            throw ParseError("link endpoint out of range", line.number);
        }
        if (i == j) throw ParseError("self-links are not allowed", line.number);
        if (d.distance(static_cast<int>(i), static_cast<int>(j)).has_value()) {
            throw ParseError("duplicate link (" + tokens[0] + "," + tokens[1] + ")", line.number);
        }
        Rational distance(0);
        try {
            distance = Rational::parse(tokens[2]);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line.number);
        }
        try {
            d.set_distance(static_cast<int>(i), static_cast<int>(j), distance);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line.number);
        }
    }
    return d;
}

std::string emit_sweep_csv(const SweepReport& report) {
    std::string csv =
        "weight,trials,best_capacity,best_raw_count,mean_capacity,p50,p95,best_trial_index,"
        "seconds\n";
    for (const WeightResult& r : report.results) {
        csv += std::to_string(r.weight);
        csv += ',';
        csv += std::to_string(r.trials);
        csv += ',';
        csv += std::to_string(r.best_capacity);
        csv += ',';
        csv += std::to_string(r.best_census.raw_count);
        csv += ',';
        csv += format_ratio(r.capacity_sum, r.trials, 4);
        csv += ',';
        csv += std::to_string(histogram_percentile(r.capacity_histogram, 1, 2));
        csv += ',';
        csv += std::to_string(histogram_percentile(r.capacity_histogram, 19, 20));
        csv += ',';
        csv += std::to_string(r.best_trial_index);
        csv += ',';
        csv += format_fixed(r.seconds, 3);
        csv += '\n';
    }
    return csv;
}

std::string emit_baseline_csv(const std::vector<BaselineRow>& rows) {
    std::string csv = "n,m,loading,stored_fraction_mean,stored_fraction_stddev,draws\n";
    for (const BaselineRow& row : rows) {
        csv += std::to_string(row.n);
        csv += ',';
        csv += std::to_string(row.m);
        csv += ',';
        csv += format_fixed(row.loading, 4);
        csv += ',';
        csv += format_fixed(row.stored_fraction_mean, 4);
        csv += ',';
        csv += format_fixed(row.stored_fraction_stddev, 4);
        csv += ',';
        csv += std::to_string(row.draws);
        csv += '\n';
    }
    return csv;
}

namespace {

std::string iso_timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buffer;
}

bool semver_ok(const std::string& version) {
    int dots = 0;
    bool digit_pending = true;
    for (char c : version) {
        if (c == '.') {
            if (digit_pending) return false;
            ++dots;
            digit_pending = true;
        } else if (c >= '0' && c <= '9') {
            digit_pending = false;
        } else {
            return false;
        }
    }
    return dots == 2 && !digit_pending;
}

json census_to_json(const MemoryCensus& census) {
    json fixed = json::array();
    for (const BipolarPattern& p : census.fixed_points) fixed.push_back(p.to_string());
    json classes = json::array();
    for (const MemoryClass& cls : census.classes) {
        classes.push_back({{"pattern", cls.representative.to_string()},
                           {"both_members_fixed", cls.both_members_fixed}});
    }
    return {{"n", census.n},
            {"raw_count", census.raw_count},
            {"class_count", census.class_count},
            {"fixed_points", std::move(fixed)},
            {"classes", std::move(classes)}};
}

MemoryCensus census_from_json(const json& j) {
    MemoryCensus census;
    census.n = j.at("n").get<int>();
    for (const auto& s : j.at("fixed_points")) {
        census.fixed_points.push_back(BipolarPattern::from_string(s.get<std::string>()));
    }
    for (const auto& e : j.at("classes")) {
        census.classes.push_back({BipolarPattern::from_string(e.at("pattern").get<std::string>()),
                                  e.at("both_members_fixed").get<bool>()});
    }
    census.raw_count = j.at("raw_count").get<std::uint64_t>();
    census.class_count = j.at("class_count").get<std::uint64_t>();
    if (census.raw_count != census.fixed_points.size() ||
        census.class_count != census.classes.size()) {
        throw ParseError("census counts do not match their lists");
    }
    return census;
}

json weight_result_to_json(const WeightResult& r) {
    json histogram = json::array();
    for (const auto& [capacity, count] : r.capacity_histogram) {
        histogram.push_back(json::array({capacity, count}));
    }
    return {{"weight", r.weight},
            {"trials", r.trials},
            {"best_capacity", r.best_capacity},
            {"best_trial_index", r.best_trial_index},
            {"best_matrix", render_matrix(r.best_matrix)},
            {"best_census", census_to_json(r.best_census)},
            {"capacity_histogram", std::move(histogram)},
            {"capacity_sum", r.capacity_sum},
            {"max_raw_count", r.max_raw_count},
            {"seconds", r.seconds}};
}

WeightResult weight_result_from_json(const json& j) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> histogram;
    for (const auto& e : j.at("capacity_histogram")) {
        histogram.emplace_back(e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint64_t>());
    }
    return WeightResult{j.at("weight").get<int>(),
                        j.at("trials").get<std::uint64_t>(),
                        j.at("best_capacity").get<std::uint64_t>(),
                        j.at("best_trial_index").get<std::uint64_t>(),
                        parse_matrix(j.at("best_matrix").get<std::string>()),
                        census_from_json(j.at("best_census")),
                        std::move(histogram),
                        j.at("capacity_sum").get<std::uint64_t>(),
                        j.at("max_raw_count").get<std::uint64_t>(),
                        j.at("seconds").get<double>()};
}

json sweep_to_json(const SweepReport& report) {
    json results = json::array();
    for (const WeightResult& r : report.results) results.push_back(weight_result_to_json(r));
    return {{"config",
             {{"n", report.config.n},
              {"weights", report.config.weights},
              {"trials_per_weight", report.config.trials_per_weight},
              {"master_seed", report.config.master_seed},
              {"allow_zero", report.config.allow_zero},
              {"enum_limit", report.config.enum_limit}}},
            {"rng",
             {{"generator", report.generator},
              {"derivation", report.derivation},
              {"draw", report.draw_scheme},
              {"master_seed", report.config.master_seed}}},
            {"results", std::move(results)}};
}

SweepReport sweep_from_json(const json& j) {
    SweepReport report;
    const json& config = j.at("config");
    report.config.n = config.at("n").get<int>();
    report.config.weights = config.at("weights").get<std::vector<int>>();
    report.config.trials_per_weight = config.at("trials_per_weight").get<std::uint64_t>();
    report.config.master_seed = config.at("master_seed").get<std::uint64_t>();
    report.config.allow_zero = config.at("allow_zero").get<bool>();
    report.config.enum_limit = config.at("enum_limit").get<int>();
    const json& rng = j.at("rng");
    report.generator = rng.at("generator").get<std::string>();
    report.derivation = rng.at("derivation").get<std::string>();
    report.draw_scheme = rng.at("draw").get<std::string>();
    for (const auto& r : j.at("results")) report.results.push_back(weight_result_from_json(r));
    return report;
}

json baseline_to_json(const std::vector<BaselineRow>& rows) {
    json array = json::array();
    for (const BaselineRow& row : rows) {
        array.push_back({{"n", row.n},
                         {"m", row.m},
                         {"loading", row.loading},
                         {"stored_fraction_mean", row.stored_fraction_mean},
                         {"stored_fraction_stddev", row.stored_fraction_stddev},
                         {"draws", row.draws}});
    }
    return array;
}

std::vector<BaselineRow> baseline_from_json(const json& j) {
    std::vector<BaselineRow> rows;
    for (const auto& e : j) {
        rows.push_back({e.at("n").get<int>(), e.at("m").get<int>(),
                        e.at("loading").get<double>(),
                        e.at("stored_fraction_mean").get<double>(),
                        e.at("stored_fraction_stddev").get<double>(),
                        e.at("draws").get<std::uint64_t>()});
    }
    return rows;
}

ExperimentRecord stamp(std::variant<SweepReport, MemoryCensus, std::vector<BaselineRow>> payload) {
    return ExperimentRecord{kSchemaVersion, iso_timestamp_utc(), std::move(payload)};
}

}  // namespace

ExperimentRecord make_record(SweepReport report) { return stamp(std::move(report)); }
ExperimentRecord make_record(MemoryCensus census) { return stamp(std::move(census)); }
ExperimentRecord make_record(std::vector<BaselineRow> rows) { return stamp(std::move(rows)); }

std::string render_record(const ExperimentRecord& record) {
    json j;
    j["schema_version"] = record.schema_version;
    j["timestamp"] = record.timestamp;
    if (const auto* sweep_report = std::get_if<SweepReport>(&record.payload)) {
        j["kind"] = "sweep";
        j["sweep"] = sweep_to_json(*sweep_report);
    } else if (const auto* census = std::get_if<MemoryCensus>(&record.payload)) {
        j["kind"] = "census";
        j["census"] = census_to_json(*census);
    } else {
        j["kind"] = "baseline";
        j["baseline"] = baseline_to_json(std::get<std::vector<BaselineRow>>(record.payload));
    }
    return j.dump(2) + "\n";
}

ExperimentRecord parse_record(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid record: ") + e.what());
    }
    try {
        ExperimentRecord record{j.at("schema_version").get<std::string>(),
                                j.at("timestamp").get<std::string>(), MemoryCensus{}};
        if (!semver_ok(record.schema_version)) {
            throw ParseError("schema_version must be semver-formatted");
        }
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "sweep") {
            record.payload = sweep_from_json(j.at("sweep"));
        } else if (kind == "census") {
            record.payload = census_from_json(j.at("census"));
        } else if (kind == "baseline") {
            record.payload = baseline_from_json(j.at("baseline"));
        } else {
            throw ParseError("unknown record kind '" + kind + "'");
        }
        return record;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid record: ") + e.what());
    }
}

std::string format_ratio(std::uint64_t num, std::uint64_t den, int places) {
    if (den == 0) throw std::invalid_argument("ratio with zero denominator");
    unsigned __int128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const unsigned __int128 scaled =
        (static_cast<unsigned __int128>(num) * scale * 2 + den) / (2 * static_cast<unsigned __int128>(den));
    const std::uint64_t whole = static_cast<std::uint64_t>(scaled / scale);
    std::uint64_t frac = static_cast<std::uint64_t>(scaled % scale);
    std::string text = std::to_string(whole);
    if (places > 0) {
        std::string digits(static_cast<std::size_t>(places), '0');
        for (int i = places - 1; i >= 0 && frac > 0; --i) {
            digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + frac % 10);
            frac /= 10;
        }
        text += '.';
        text += digits;
    }
    return text;
}

std::string format_fixed(double value, int places) {
    std::int64_t scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const double scaled = value * static_cast<double>(scale);
    const std::int64_t rounded = std::llround(scaled);
    const bool negative = rounded < 0;
    std::uint64_t magnitude = negative ? static_cast<std::uint64_t>(-rounded)
                                       : static_cast<std::uint64_t>(rounded);
    const std::uint64_t whole = magnitude / static_cast<std::uint64_t>(scale);
    std::uint64_t frac = magnitude % static_cast<std::uint64_t>(scale);
    std::string text = negative ? "-" : "";
    text += std::to_string(whole);
    if (places > 0) {
        std::string digits(static_cast<std::size_t>(places), '0');
        for (int i = places - 1; i >= 0 && frac > 0; --i) {
            digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + frac % 10);
            frac /= 10;
        }
        text += '.';
        text += digits;
    }
    return text;
}

}  // namespace memcap
