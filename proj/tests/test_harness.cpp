#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "asymea/harness.hpp"

using namespace asymea;
using namespace asymea::harness;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("asymea_test_" + name);
    fs::remove_all(dir);
    return dir;
}

std::string error_of(std::string_view text) {
    try {
        parse_config(text);
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("parse_config defaults and fields") {
    const auto s = parse_config("n_values = [100]\nalgorithms = [static-asym]\n");
    CHECK(s.n_values == std::vector<std::size_t>{100});
    CHECK(s.algorithms == std::vector<Operator>{Operator::static_asym});
    CHECK(s.alpha == 0.1);
    CHECK(s.phase_length == 50);
    CHECK(s.runs == 1000);
    CHECK(s.target == "all-ones");
    CHECK(s.parallelism == available_parallelism());

    const auto t = parse_config(R"(
        # comment line
        n_values = [10, 20]   # trailing comment
        algorithms = [standard, self-adjusting-asym]
        target = half-split
        runs = 5
        alpha = 0.05
        N = 10
        master_seed = 9
        output = out
        parallelism = 2
        max_evaluations = 1000
        trace = true
    )");
    CHECK(t.n_values == std::vector<std::size_t>{10, 20});
    CHECK(t.target == "half-split");
    CHECK(t.runs == 5);
    CHECK(t.alpha == 0.05);
    CHECK(t.phase_length == 10);
    CHECK(t.master_seed == 9);
    CHECK(t.output == fs::path("out"));
    CHECK(t.parallelism == 2);
    CHECK(t.max_evaluations == std::optional<std::uint64_t>{1000});
    CHECK(t.trace);
}

TEST_CASE("parse_config errors name the field") {
    const char* base = "n_values = [100]\nalgorithms = [standard]\n";
    CHECK(error_of(std::string(base) + "alpha = 0.3\n").starts_with("alpha"));
    CHECK(error_of(std::string(base) + "N = 7\n").starts_with("N"));
    CHECK(error_of(std::string(base) + "runs = 0\n").starts_with("runs"));
    CHECK(error_of(std::string(base) + "runs = many\n").starts_with("runs"));
    CHECK(error_of(std::string(base) + "colour = red\n").starts_with("colour"));
    CHECK(error_of(std::string(base) + "target = stairs\n").starts_with("target"));
    CHECK(error_of("algorithms = [standard]\n").starts_with("n_values"));
    CHECK(error_of("n_values = [100]\nalgorithms = [fast]\n").starts_with("algorithms"));
}

TEST_CASE("presets") {
    const auto t1 = preset("onemax");
    CHECK(t1.n_values.size() == 7);
    CHECK(t1.n_values.front() == 8000);
    CHECK(t1.n_values.back() == 20000);
    CHECK(t1.algorithms.size() == 3);
    CHECK(t1.n_values.size() * t1.algorithms.size() == 21);
    CHECK(t1.target == "all-ones");
    CHECK(preset("half-split").target == "half-split");
    CHECK(preset("quick").runs == 100);
    CHECK_THROWS_AS(preset("leading-ones"), std::invalid_argument);
}

TEST_CASE("cell seeds differ across cells") {
    CHECK(cell_seed(1, Operator::standard, 100) != cell_seed(1, Operator::standard, 200));
    CHECK(cell_seed(1, Operator::standard, 100) != cell_seed(1, Operator::static_asym, 100));
    CHECK(cell_seed(1, Operator::standard, 100) != cell_seed(2, Operator::standard, 100));
}

TEST_CASE("run_experiment writes reproducible CSVs") {
    ExperimentSpec spec;
    spec.n_values = {50, 80};
    spec.algorithms = {Operator::standard, Operator::static_asym, Operator::self_adjusting_asym};
    spec.runs = 6;
    spec.trace = true;

    spec.output = scratch("a");
    spec.parallelism = 1;
    const auto cells = run_experiment(spec);
    REQUIRE(cells.size() == 6);

    const auto a = spec.output;
    spec.output = scratch("b");
    spec.parallelism = 3;
    run_experiment(spec);
    const auto b = spec.output;

    for (const char* f : {"runs.csv", "summary.csv", "trace_self-adjusting-asym_80.csv"})
        CHECK(slurp(a / f) == slurp(b / f));

    const auto rows = read_run_csv(a / "runs.csv");
    REQUIRE(rows.size() == 36);
    CHECK(rows[0].algorithm == "standard");
    CHECK(rows[0].n == 50);
    CHECK(rows[0].run_id == 0);
    CHECK(rows[0].seed == derive_seed(cell_seed(1, Operator::standard, 50), 0));

    // Summary rows are the mean/std of the run rows they came from.
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const std::vector<RunRow> cell_rows(rows.begin() + static_cast<long>(6 * c),
                                            rows.begin() + static_cast<long>(6 * c + 6));
        const auto s = stats::summarize(evaluations_of(cell_rows));
        CHECK(s.mean == cells[c].summary.mean);
        CHECK(s.std == cells[c].summary.std);
    }

    std::istringstream summary(slurp(a / "summary.csv"));
    std::string line;
    std::getline(summary, line);
    CHECK(line == kSummaryHeader);

    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("capped runs are written as cap-reached") {
    ExperimentSpec spec;
    spec.n_values = {2000};
    spec.algorithms = {Operator::standard};
    spec.runs = 2;
    spec.max_evaluations = 5;
    spec.output = scratch("cap");
    const auto cells = run_experiment(spec);
    CHECK(cells[0].capped == 2);
    const auto text = slurp(spec.output / "runs.csv");
    CHECK(text.find(",cap-reached,") != std::string::npos);
    const auto rows = read_run_csv(spec.output / "runs.csv");
    CHECK_FALSE(rows[0].evaluations.has_value());
    CHECK(evaluations_of(rows).empty());
    fs::remove_all(spec.output);
}

TEST_CASE("run CSV round trip and errors") {
    RunConfig config(Target::all_ones(30));
    config.op = Operator::static_asym;
    const auto records = run_batch_serial(config, 4, 77);
    std::ostringstream out;
    out << kRunHeader << '\n';
    write_run_rows(out, {Operator::static_asym, 30, "all-ones", 0.1, 50}, records);

    std::istringstream in(out.str());
    const auto rows = read_run_csv(in);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(rows[i].evaluations == records[i].evaluations);
        CHECK(rows[i].seed == records[i].seed);
        CHECK(rows[i].final_fitness == 30);
    }

    std::istringstream no_header("standard,1,all-ones,0.1,50,0,1,1,1\n");
    CHECK_THROWS_AS(read_run_csv(no_header), std::runtime_error);
    std::istringstream bad_row(std::string(kRunHeader) + "\nstandard,1,all-ones\n");
    try {
        read_run_csv(bad_row);
        FAIL("expected an error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).starts_with("line 2"));
    }
}

TEST_CASE("shipped configs parse") {
    for (const char* name : {"quick.cfg", "onemax.cfg", "half_split.cfg"}) {
        INFO(name);
        const auto spec = parse_config(slurp(fs::path(ASYMEA_CONFIG_DIR) / name));
        CHECK(spec.algorithms.size() == 3);
    }
    CHECK(parse_config(slurp(fs::path(ASYMEA_CONFIG_DIR) / "half_split.cfg")).target == "half-split");
}
