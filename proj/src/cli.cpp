#include "memcap/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "memcap/baselines.hpp"
#include "memcap/enumerate.hpp"
#include "memcap/errors.hpp"
#include "memcap/generator.hpp"
#include "memcap/golden.hpp"
#include "memcap/report.hpp"
#include "memcap/sampling.hpp"
#include "memcap/search.hpp"

namespace memcap {
namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << content;
}

void apply_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

std::vector<int> parse_weight_list(const std::string& csv) {
    std::vector<int> weights;
    std::string token;
    std::istringstream stream(csv);
    while (std::getline(stream, token, ',')) {
        try {
            std::size_t consumed = 0;
            const int w = std::stoi(token, &consumed);
            if (consumed != token.size() || w < 1) throw std::invalid_argument(token);
            weights.push_back(w);
        } catch (const std::exception&) {
            throw ParseError("weights must be a comma-separated list of positive integers, got '" +
                             token + "'");
        }
    }
    if (weights.empty()) throw ParseError("weights list is empty");
    return weights;
}

std::vector<double> parse_loading_list(const std::string& csv) {
    std::vector<double> loadings;
    std::string token;
    std::istringstream stream(csv);
    while (std::getline(stream, token, ',')) {
        try {
            std::size_t consumed = 0;
            const double value = std::stod(token, &consumed);
            if (consumed != token.size() || !(value > 0.0)) throw std::invalid_argument(token);
            loadings.push_back(value);
        } catch (const std::exception&) {
            throw ParseError("loadings must be a comma-separated list of positive numbers, got '" +
                             token + "'");
        }
    }
    if (loadings.empty()) throw ParseError("loadings list is empty");
    return loadings;
}

int cmd_enumerate(const std::string& matrix_path, bool list, int enum_limit,
                  const std::string& report_path, std::ostream& out) {
    const SynapticMatrix t = parse_matrix(read_file(matrix_path));
    const MemoryCensus census = enumerate_memories(t, enum_limit);
    out << "raw=" << census.raw_count << " classes=" << census.class_count << "\n";
    if (list) {
        for (const MemoryClass& cls : census.classes) {
            out << cls.representative.to_string() << "\n";
        }
    }
    if (!report_path.empty()) write_file(report_path, render_record(make_record(census)));
    return 0;
}

int cmd_sweep(const SweepConfig& config, const std::string& csv_path,
              const std::string& report_path, std::ostream& out) {
    const SweepReport report = sweep(config);
    write_file(csv_path, emit_sweep_csv(report));
    if (!report_path.empty()) write_file(report_path, render_record(make_record(report)));
    out << "weight best_capacity mean_capacity p50 p95 trials\n";
    for (const SummaryRow& row : summarize(report)) {
        out << row.weight << ' ' << row.best_capacity << ' '
            << format_ratio(row.mean_num, row.mean_den, 4) << ' ' << row.p50 << ' ' << row.p95
            << ' ' << row.trials << "\n";
    }
    return 0;
}

bool all_local_fields_odd(const SynapticMatrix& t) {
    const int n = t.n();
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 0; k < total; ++k) {
        for (int i = 0; i < n; ++i) {
            const int* row = t.row(i);
            std::int64_t sum = 0;
            for (int j = 0; j < n; ++j) {
                sum += static_cast<std::int64_t>(row[j]) * ((k >> j) & 1 ? -1 : 1);
            }
            if ((sum & 1) == 0) return false;
        }
    }
    return true;
}

int cmd_verify(const std::string& golden_override, std::ostream& out) {
    struct Check {
        std::string name;
        bool ok;
        std::string detail;
    };
    std::vector<Check> checks;

    {
        const SynapticMatrix t = golden_override.empty()
                                     ? golden10_matrix()
                                     : parse_matrix(read_file(golden_override));
        const MemoryCensus census = enumerate_memories(t);
        checks.push_back({"golden-matrix", census.class_count == 38 && census.raw_count == 76,
                          "raw=" + std::to_string(census.raw_count) +
                              " classes=" + std::to_string(census.class_count)});
    }
    {
        // weight-1 samples: every local field odd, inversion pairing exact
        const int matrices = 200;
        const SamplerConfig cfg(10, QuantizationSpec(1), 0xC0FFEE);
        int failures = 0;
        for (int trial = 0; trial < matrices; ++trial) {
            const SynapticMatrix t = sample_matrix(cfg, static_cast<std::uint64_t>(trial));
            const std::vector<std::uint64_t> indices = fixed_point_indices(t);
            const CensusCounts counts = census_counts_from_indices(t.n(), indices);
            if (counts.raw != 2 * counts.classes || !all_local_fields_odd(t)) ++failures;
        }
        checks.push_back({"parity-invariants", failures == 0,
                          std::to_string(matrices - failures) + "/" + std::to_string(matrices) +
                              " matrices"});
    }
    {
        SweepConfig config;
        config.n = 10;
        config.weights = {1, 2, 4};
        config.trials_per_weight = 2000;
        config.master_seed = 8;
        const SweepReport report = sweep(config);
        std::uint64_t lo = report.results.front().best_capacity;
        std::uint64_t hi = lo;
        for (const WeightResult& r : report.results) {
            lo = std::min(lo, r.best_capacity);
            hi = std::max(hi, r.best_capacity);
        }
        const std::uint64_t weight1 = report.results.front().best_capacity;
        bool leading = true;
        for (const WeightResult& r : report.results) {
            if (weight1 + 1 < r.best_capacity) leading = false;
        }
        std::string detail = "best=[";
        for (std::size_t i = 0; i < report.results.size(); ++i) {
            if (i > 0) detail += ' ';
            detail += std::to_string(report.results[i].best_capacity);
        }
        detail += "] spread=" + std::to_string(hi - lo);
        checks.push_back({"sweep-flatness", hi - lo <= 4 && leading, detail});
    }

    bool all_ok = true;
    for (const Check& check : checks) {
        out << check.name << ": " << check.detail << (check.ok ? " OK" : " FAIL") << "\n";
        if (!check.ok) all_ok = false;
    }
    if (!all_ok) {
        out << "FAILED:";
        for (const Check& check : checks) {
            if (!check.ok) out << ' ' << check.name;
        }
        out << "\n";
        return 1;
    }
    out << "all checks passed\n";
    return 0;
}

int cmd_baseline(int n, const std::vector<double>& loadings, std::uint64_t draws,
                 std::uint64_t seed, const std::string& csv_path, std::ostream& out) {
    const std::vector<BaselineRow> rows = baseline_table(n, loadings, draws, seed);
    const std::string csv = emit_baseline_csv(rows);
    write_file(csv_path, csv);
    out << csv;
    return 0;
}

int cmd_generator_demo(const std::string& matrix_path, const std::string& prox_path,
                       int seed_neuron, const std::string& probe_text, std::uint64_t max_rounds,
                       std::ostream& out) {
    const SynapticMatrix t = parse_matrix(read_file(matrix_path));
    const ProximityMatrix d = parse_proximity(read_file(prox_path));
    const BipolarPattern probe = BipolarPattern::from_string(probe_text);
    if (t.n() != d.n() || probe.size() != t.n()) {
        throw DimensionError("matrix, proximity, and probe dimensions differ");
    }

    const ActivationSchedule schedule = arrival_order(d, seed_neuron);
    out << "seed neuron " << schedule.seed_neuron << "\n";
    for (int v : schedule.order) {
        out << "neuron " << v << " arrives at "
            << schedule.arrival_times[static_cast<std::size_t>(v)].to_string() << "\n";
    }

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(t.n()));
    order.push_back(seed_neuron);
    order.insert(order.end(), schedule.order.begin(), schedule.order.end());

    out << "trajectory:\n" << probe.to_string() << "\n";
    BipolarPattern state = probe;
    std::uint64_t rounds = 0;
    bool converged = false;
    while (rounds < max_rounds && !converged) {
        const RecallResult step = recall(t, state, RecallSchedule::sequential_order(order), 1);
        ++rounds;
        if (step.converged) {
            converged = true;
        } else {
            state = step.state;
            out << state.to_string() << "\n";
        }
    }
    if (converged) {
        out << "converged to a fixed point in " << rounds << (rounds == 1 ? " round" : " rounds")
            << "\n";
    } else {
        out << "did not converge within " << max_rounds << " rounds\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fixed-point memory census, capacity sweeps, and recall schedules for random "
                 "symmetric quantized networks"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list the fixed-point memories of a matrix");
    std::string enum_matrix_path;
    bool enum_list = false;
    int enum_limit = kDefaultEnumLimit;
    int enum_threads = 0;
    std::string enum_report_path;
    enumerate_cmd->add_option("--matrix", enum_matrix_path, "matrix text file")->required();
    enumerate_cmd->add_flag("--list", enum_list, "print one '+'/'-' line per memory class");
    enumerate_cmd->add_option("--enum-limit", enum_limit, "max neurons for a 2^n enumeration");
    enumerate_cmd->add_option("--threads", enum_threads, "worker threads (0 = library default)");
    enumerate_cmd->add_option("--report", enum_report_path, "write a structured census record");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "best-of-N capacity search across weights");
    int sweep_n = 0;
    std::string sweep_weights;
    std::uint64_t sweep_trials = 0;
    std::uint64_t sweep_seed = 0;
    bool sweep_allow_zero = false;
    int sweep_enum_limit = kDefaultEnumLimit;
    int sweep_threads = 0;
    std::string sweep_csv_path;
    std::string sweep_report_path;
    sweep_cmd->add_option("--n", sweep_n, "neurons per matrix")->required();
    sweep_cmd->add_option("--weights", sweep_weights, "comma-separated ascending weights")->required();
    sweep_cmd->add_option("--trials", sweep_trials, "matrices per weight")->required();
    sweep_cmd->add_option("--seed", sweep_seed, "master seed")->required();
    sweep_cmd->add_flag("--allow-zero", sweep_allow_zero, "include 0 in the sampled value set");
    sweep_cmd->add_option("--enum-limit", sweep_enum_limit, "max neurons for a 2^n enumeration");
    sweep_cmd->add_option("--threads", sweep_threads, "worker threads (0 = library default)");
    sweep_cmd->add_option("--out", sweep_csv_path, "CSV output path")->required();
    sweep_cmd->add_option("--report", sweep_report_path, "structured report output path");

    // verify-paper
    auto* verify_cmd = app.add_subcommand("verify-paper", "run the built-in verification gate");
    int verify_threads = 0;
    std::string golden_override;
    verify_cmd->add_option("--threads", verify_threads, "worker threads (0 = library default)");
    verify_cmd->add_option("--golden-override", golden_override, "testing hook: replaces the embedded matrix")
        ->group("");

    // baseline
    auto* baseline_cmd = app.add_subcommand("baseline", "outer-product storage fractions across loadings");
    int baseline_n = 0;
    std::string baseline_loadings;
    std::uint64_t baseline_draws = 0;
    std::uint64_t baseline_seed = 0;
    std::string baseline_csv_path;
    baseline_cmd->add_option("--n", baseline_n, "neurons per pattern")->required();
    baseline_cmd->add_option("--loadings", baseline_loadings, "comma-separated loadings m/n")->required();
    baseline_cmd->add_option("--draws", baseline_draws, "pattern sets per loading")->required();
    baseline_cmd->add_option("--seed", baseline_seed, "master seed")->required();
    baseline_cmd->add_option("--out", baseline_csv_path, "CSV output path")->required();

    // generator-demo
    auto* demo_cmd = app.add_subcommand("generator-demo", "proximity-ordered recall from a seed neuron");
    std::string demo_matrix_path;
    std::string demo_prox_path;
    int demo_seed_neuron = 0;
    std::string demo_probe;
    std::uint64_t demo_max_rounds = 1024;
    demo_cmd->add_option("--matrix", demo_matrix_path, "matrix text file")->required();
    demo_cmd->add_option("--prox", demo_prox_path, "proximity link file")->required();
    demo_cmd->add_option("--seed-neuron", demo_seed_neuron, "neuron that fires first")->required();
    demo_cmd->add_option("--probe", demo_probe, "'+'/'-' start state")->required();
    demo_cmd->add_option("--max-rounds", demo_max_rounds, "round cap before giving up");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("memcap");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (enumerate_cmd->parsed()) {
            apply_threads(enum_threads);
            return cmd_enumerate(enum_matrix_path, enum_list, enum_limit, enum_report_path, out);
        }
        if (sweep_cmd->parsed()) {
            apply_threads(sweep_threads);
            SweepConfig config;
            config.n = sweep_n;
            config.weights = parse_weight_list(sweep_weights);
            config.trials_per_weight = sweep_trials;
            config.master_seed = sweep_seed;
            config.allow_zero = sweep_allow_zero;
            config.enum_limit = sweep_enum_limit;
            config.validate();
            return cmd_sweep(config, sweep_csv_path, sweep_report_path, out);
        }
        if (verify_cmd->parsed()) {
            apply_threads(verify_threads);
            return cmd_verify(golden_override, out);
        }
        if (baseline_cmd->parsed()) {
            return cmd_baseline(baseline_n, parse_loading_list(baseline_loadings), baseline_draws,
                                baseline_seed, baseline_csv_path, out);
        }
        if (demo_cmd->parsed()) {
            return cmd_generator_demo(demo_matrix_path, demo_prox_path, demo_seed_neuron,
                                      demo_probe, demo_max_rounds, out);
        }
        err << "no subcommand selected\n";
        return 2;
    } catch (const ConnectivityError& e) {
        err << "connectivity error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const EnumerationLimitError& e) {
        err << "limit error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace memcap
