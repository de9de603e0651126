#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "memcap/cli.hpp"
#include "memcap/enumerate.hpp"
#include "memcap/golden.hpp"
#include "memcap/report.hpp"
#include "test_util.hpp"

using namespace memcap;

namespace {

struct CliOutcome {
    int code;
    std::string out;
    std::string err;
};

CliOutcome run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture_path(const std::string& name) {
    return std::string(MEMCAP_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spit(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

// drops the trailing (seconds) column of every CSV line
std::string mask_csv_seconds(const std::string& csv) {
    std::string masked;
    std::string line;
    std::istringstream lines(csv);
    while (std::getline(lines, line)) {
        const std::size_t cut = line.rfind(',');
        masked += cut == std::string::npos ? line : line.substr(0, cut);
        masked += '\n';
    }
    return masked;
}

int count_lines(const std::string& text) {
    int count = 0;
    for (char c : text) count += c == '\n';
    return count;
}

}  // namespace

TEST_CASE("cli: enumerate prints the census header") {
    const CliOutcome plain = run({"enumerate", "--matrix", fixture_path("golden10.matrix")});
    CHECK(plain.code == 0);
    CHECK(plain.out == "raw=76 classes=38\n");

    const CliOutcome listed =
        run({"enumerate", "--matrix", fixture_path("golden10.matrix"), "--list"});
    CHECK(listed.code == 0);
    CHECK(count_lines(listed.out) == 39);
    CHECK(listed.out.substr(0, 18) == "raw=76 classes=38\n");
}

TEST_CASE("cli: enumerate rejects invalid matrices with exit 2") {
    const auto dir = testutil::temp_dir();
    const auto bad = dir / "bad_diag.matrix";
    spit(bad, "2\n1 1\n1 0\n");
    const CliOutcome outcome = run({"enumerate", "--matrix", bad.string()});
    CHECK(outcome.code == 2);
    CHECK(outcome.err.find("diagonal") != std::string::npos);

    const CliOutcome missing = run({"enumerate", "--matrix", (dir / "nope.matrix").string()});
    CHECK(missing.code == 2);
}

TEST_CASE("cli: enumerate census record matches the printed counts") {
    const auto dir = testutil::temp_dir();
    const auto record_path = dir / "census.report";
    const CliOutcome outcome = run({"enumerate", "--matrix", fixture_path("golden10.matrix"),
                                    "--report", record_path.string()});
    CHECK(outcome.code == 0);
    const ExperimentRecord record = parse_record(slurp(record_path));
    const auto& census = std::get<MemoryCensus>(record.payload);
    CHECK(census.class_count == 38);
    CHECK(census.raw_count == 76);
}

TEST_CASE("cli: sweep writes a one-row CSV for a single weight") {
    const auto dir = testutil::temp_dir();
    const auto csv_path = dir / "single.csv";
    const CliOutcome outcome = run({"sweep", "--n", "10", "--weights", "1", "--trials", "1",
                                    "--seed", "7", "--out", csv_path.string()});
    CHECK(outcome.code == 0);
    const std::string csv = slurp(csv_path);
    CHECK(count_lines(csv) == 2);
    CHECK(csv.rfind("weight,trials,best_capacity,", 0) == 0);
    CHECK(outcome.out.find("weight best_capacity mean_capacity p50 p95 trials\n") == 0);
}

TEST_CASE("cli: sweep output is deterministic across reruns and worker counts") {
    const auto dir = testutil::temp_dir();
    const auto csv_a = dir / "sweep_a.csv";
    const auto csv_b = dir / "sweep_b.csv";
    const std::vector<std::string> base{"sweep", "--n",     "10", "--weights", "1,2,4,8",
                                        "--trials", "300",  "--seed", "7"};

    auto with = [&](const std::string& out_path, const std::string& threads) {
        std::vector<std::string> args = base;
        args.insert(args.end(), {"--out", out_path, "--threads", threads});
        return run(args);
    };

    const CliOutcome first = with(csv_a.string(), "1");
    const CliOutcome second = with(csv_b.string(), "4");
    CHECK(first.code == 0);
    CHECK(second.code == 0);
    CHECK(first.out == second.out);  // summary carries no timing
    const std::string body_a = slurp(csv_a);
    const std::string body_b = slurp(csv_b);
    CHECK(count_lines(body_a) == 5);
    CHECK(mask_csv_seconds(body_a) == mask_csv_seconds(body_b));
}

TEST_CASE("cli: sweep guards the enumeration limit") {
    const auto dir = testutil::temp_dir();
    const CliOutcome blocked = run({"sweep", "--n", "30", "--weights", "1", "--trials", "1",
                                    "--seed", "1", "--out", (dir / "x.csv").string()});
    CHECK(blocked.code == 2);
    CHECK(blocked.err.find("limit") != std::string::npos);
}

TEST_CASE("cli: sweep flag validation") {
    const auto dir = testutil::temp_dir();
    CHECK(run({"sweep", "--n", "10", "--weights", "2,1", "--trials", "1", "--seed", "1", "--out",
               (dir / "y.csv").string()})
              .code == 2);
    CHECK(run({"sweep", "--n", "10", "--weights", "a", "--trials", "1", "--seed", "1", "--out",
               (dir / "y.csv").string()})
              .code == 2);
    CHECK(run({"sweep", "--n", "10", "--weights", "1", "--trials", "1"}).code == 2);
}

TEST_CASE("cli: verify-paper passes on a fresh build and is byte-stable") {
    const CliOutcome first = run({"verify-paper"});
    CHECK(first.code == 0);
    CHECK(first.out.find("golden-matrix: raw=76 classes=38 OK") != std::string::npos);
    CHECK(first.out.find("parity-invariants:") != std::string::npos);
    CHECK(first.out.find("sweep-flatness:") != std::string::npos);
    CHECK(first.out.find("all checks passed") != std::string::npos);

    const CliOutcome second = run({"verify-paper"});
    CHECK(second.out == first.out);
}

TEST_CASE("cli: verify-paper fails loudly on a corrupted golden matrix") {
    // flip one symmetric pair so the matrix still parses
    SynapticMatrix golden = golden10_matrix();
    std::vector<int> entries = golden.entries();
    entries[0 * 10 + 1] = -entries[0 * 10 + 1];
    entries[1 * 10 + 0] = -entries[1 * 10 + 0];
    const SynapticMatrix corrupted(10, golden.spec(), std::move(entries));

    const auto dir = testutil::temp_dir();
    const auto path = dir / "corrupted.matrix";
    spit(path, render_matrix(corrupted));

    const CliOutcome outcome = run({"verify-paper", "--golden-override", path.string()});
    CHECK(outcome.code == 1);
    CHECK(outcome.out.find("golden-matrix") != std::string::npos);
    CHECK(outcome.out.find("FAILED: golden-matrix") != std::string::npos);
}

TEST_CASE("cli: baseline writes and echoes its CSV") {
    const auto dir = testutil::temp_dir();
    const auto csv_path = dir / "baseline.csv";
    const CliOutcome outcome = run({"baseline", "--n", "16", "--loadings", "0.0625,0.25",
                                    "--draws", "20", "--seed", "3", "--out", csv_path.string()});
    CHECK(outcome.code == 0);
    const std::string csv = slurp(csv_path);
    CHECK(outcome.out == csv);
    CHECK(count_lines(csv) == 3);
    CHECK(csv.rfind("n,m,loading,", 0) == 0);

    CHECK(run({"baseline", "--n", "16", "--loadings", "x", "--draws", "1", "--seed", "1", "--out",
               (dir / "z.csv").string()})
              .code == 2);
}

TEST_CASE("cli: generator demo replays a stored memory in place") {
    const SynapticMatrix demo = parse_matrix(slurp(fixture_path("demo5.matrix")));
    const MemoryCensus census = enumerate_memories(demo);
    REQUIRE(census.raw_count >= 1);
    const std::string probe = census.fixed_points[0].to_string();

    const CliOutcome outcome =
        run({"generator-demo", "--matrix", fixture_path("demo5.matrix"), "--prox",
             fixture_path("demo5.prox"), "--seed-neuron", "0", "--probe=" + probe});
    CHECK(outcome.code == 0);
    CHECK(outcome.out.find("neuron 1 arrives at 1") != std::string::npos);
    CHECK(outcome.out.find("trajectory:\n" + probe + "\n") != std::string::npos);
    CHECK(outcome.out.find("converged to a fixed point in 1 round") != std::string::npos);
}

TEST_CASE("cli: generator demo rejects broken inputs with exit 2") {
    const auto dir = testutil::temp_dir();
    const auto isolated = dir / "isolated.prox";
    spit(isolated, "5\n0 1 1\n1 2 1\n2 3 1\n");  // neuron 4 unreachable

    const CliOutcome unreachable =
        run({"generator-demo", "--matrix", fixture_path("demo5.matrix"), "--prox",
             isolated.string(), "--seed-neuron", "0", "--probe=+++++"});
    CHECK(unreachable.code == 2);
    CHECK(unreachable.err.find("unreachable") != std::string::npos);

    const CliOutcome bad_seed =
        run({"generator-demo", "--matrix", fixture_path("demo5.matrix"), "--prox",
             fixture_path("demo5.prox"), "--seed-neuron", "9", "--probe=+++++"});
    CHECK(bad_seed.code == 2);

    const CliOutcome bad_probe =
        run({"generator-demo", "--matrix", fixture_path("demo5.matrix"), "--prox",
             fixture_path("demo5.prox"), "--seed-neuron", "0", "--probe=+++"});
    CHECK(bad_probe.code == 2);
}

TEST_CASE("cli: usage errors exit with 2, help with 0") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
