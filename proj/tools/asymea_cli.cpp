// Command-line front end: single runs, experiment sweeps, run-file comparison
// and oracle queries.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "asymea/ea.hpp"
#include "asymea/harness.hpp"
#include "asymea/oracle.hpp"
#include "asymea/stats.hpp"

using namespace asymea;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BitProfile parse_profile(const std::vector<std::uint64_t>& v) {
    if (v.size() != 4) throw CLI::ValidationError("--profile", "expects n00,n01,n10,n11");
    return {v[0], v[1], v[2], v[3]};
}

int cmd_run(std::size_t n, const std::string& target, const std::string& op, double alpha,
            std::uint32_t phase_length, std::uint64_t seed, std::uint64_t max_evals,
            const std::string& trace_path) {
    RunConfig config(Target::parse(target, n));
    config.op = parse_operator(op);
    config.alpha = alpha;
    config.phase_length = phase_length;
    config.seed = seed;
    if (max_evals > 0) config.max_evaluations = max_evals;
    config.trace = !trace_path.empty();

    const RunRecord r = run(config);
    std::cout << "algorithm=" << to_string(config.op) << '\n'
              << "n=" << n << '\n'
              << "target=" << target << '\n'
              << "seed=" << r.seed << '\n'
              << "evaluations="
              << (r.evaluations ? std::to_string(*r.evaluations) : std::string(harness::kCapReached))
              << '\n'
              << "final_fitness=" << r.final_fitness << '\n'
              << "improvements=" << r.improvements << '\n';
    if (config.trace) {
        std::ofstream out(trace_path);
        if (!out) throw std::runtime_error("cannot open '" + trace_path + "' for writing");
        out << harness::kTraceHeader << '\n';
        harness::write_trace_rows(out, {r});
        std::cout << "phases=" << r.strength_trace.size() << '\n';
    }
    return r.evaluations ? 0 : 2;
}

int cmd_compare(const std::string& path_a, const std::string& path_b) {
    const auto a = harness::evaluations_of(harness::read_run_csv(path_a));
    const auto b = harness::evaluations_of(harness::read_run_csv(path_b));
    const auto sa = stats::summarize(a);
    const auto sb = stats::summarize(b);
    const auto mw = stats::mann_whitney_u(a, b);

    std::cout << std::setprecision(10);
    std::cout << "file,runs,mean,std\n"
              << path_a << ',' << sa.count << ',' << sa.mean << ',' << sa.std << '\n'
              << path_b << ',' << sb.count << ',' << sb.mean << ',' << sb.std << '\n';
    std::cout << "U,p_two_sided,method\n"
              << mw.u << ',' << mw.p_two_sided << ',' << (mw.exact ? "exact" : "normal") << "\n\n";
    std::cout << "A: " << sa.count << " runs, mean " << sa.mean << ", std " << sa.std << '\n'
              << "B: " << sb.count << " runs, mean " << sb.mean << ", std " << sb.std << '\n'
              << "Mann-Whitney U = " << mw.u << ", two-sided p = " << mw.p_two_sided << '\n';
    return 0;
}

int cmd_verify_lemma(double alpha, int parallelism, const std::string& output) {
    const auto rows = oracle::lemma1_sweep(oracle::LemmaGrid::standard(alpha), parallelism);
    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) throw std::runtime_error("cannot open '" + output + "' for writing");
    }
    std::ostream& out = output.empty() ? std::cout : file;
    out << "zeros,ones,r0,beta,lhs,rhs,margin,satisfied\n" << std::setprecision(17);
    std::size_t violations = 0;
    for (const auto& r : rows) {
        out << r.zeros << ',' << r.ones << ',' << r.r0 << ',' << r.beta << ',' << r.check.lhs
            << ',' << r.check.rhs << ',' << r.check.margin() << ','
            << (r.check.satisfied ? "true" : "false") << '\n';
        if (!r.check.satisfied) ++violations;
    }
    std::cerr << rows.size() << " combinations checked, " << violations << " violations\n";
    return violations == 0 ? 0 : 1;
}

int cmd_oracle(const std::vector<std::uint64_t>& profile_v, double p0, double p1,
               std::uint64_t samples, std::uint64_t seed) {
    const auto profile = parse_profile(profile_v);
    const auto pair = ProbabilityPair::checked(p0, p1);
    std::cout << std::setprecision(17);
    std::cout << "exact=" << oracle::exact_success_probability(profile, pair) << '\n';
    if (samples > 0) {
        Rng rng(seed);
        const auto mc = oracle::mc_success_probability(profile, pair, samples, rng);
        std::cout << "mc_estimate=" << mc.estimate << '\n'
                  << "mc_std_error=" << mc.std_error << '\n'
                  << "mc_samples=" << mc.samples << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(1+1) EA with self-adjusting asymmetric mutation on OneMax_a"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "Single run; prints the run record");
    std::size_t n = 100;
    std::string target = "all-ones";
    std::string op = "self-adjusting-asym";
    double alpha = 0.1;
    std::uint32_t phase_length = 50;
    std::uint64_t seed = 0;
    std::uint64_t max_evals = 0;
    std::string trace_path;
    run_cmd->add_option("-n,--n", n, "String length")->check(CLI::PositiveNumber);
    run_cmd->add_option("--target", target, "all-ones | all-zeros | half-split | pattern:<bits>");
    run_cmd->add_option("--operator", op, "standard | static-asym | self-adjusting-asym");
    run_cmd->add_option("--alpha", alpha, "Learning rate, 0 < alpha < 1/4");
    run_cmd->add_option("--N", phase_length, "Observation phase length (even)");
    run_cmd->add_option("--seed", seed, "Run seed")->required();
    run_cmd->add_option("--max-evaluations", max_evals, "Evaluation cap (default 10^4 n)");
    run_cmd->add_option("--trace", trace_path, "Write per-phase strength trace CSV");

    // experiment
    auto* exp_cmd = app.add_subcommand("experiment", "Sweep (algorithm, n) cells; writes CSVs");
    std::string config_path;
    std::string preset_name;
    std::string output_override;
    int parallelism_override = 0;
    std::uint64_t runs_override = 0;
    auto* config_opt = exp_cmd->add_option("config", config_path, "Experiment spec file");
    auto* preset_opt =
        exp_cmd->add_option("--preset", preset_name, "quick | onemax | half-split");
    config_opt->excludes(preset_opt);
    exp_cmd->add_option("--output", output_override, "Output directory");
    exp_cmd->add_option("--parallelism", parallelism_override, "Worker threads");
    exp_cmd->add_option("--runs", runs_override, "Runs per cell");

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "Summaries and Mann-Whitney U test on two run CSVs");
    std::string cmp_a;
    std::string cmp_b;
    cmp_cmd->add_option("a", cmp_a, "First run CSV")->required()->check(CLI::ExistingFile);
    cmp_cmd->add_option("b", cmp_b, "Second run CSV")->required()->check(CLI::ExistingFile);

    // verify-lemma
    auto* lemma_cmd =
        app.add_subcommand("verify-lemma", "Exact-oracle sweep of the strength-shift inequality");
    double lemma_alpha = 0.1;
    int lemma_parallelism = harness::available_parallelism();
    std::string lemma_output;
    lemma_cmd->add_option("--alpha", lemma_alpha, "Grid learning rate");
    lemma_cmd->add_option("--parallelism", lemma_parallelism, "Worker threads");
    lemma_cmd->add_option("-o,--output", lemma_output, "CSV path (default stdout)");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Strict-improvement probability for one profile");
    std::vector<std::uint64_t> profile_v;
    double p0 = 0.0;
    double p1 = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t oracle_seed = 1;
    oracle_cmd->add_option("--profile", profile_v, "n00,n01,n10,n11")->required()->delimiter(',');
    oracle_cmd->add_option("--p0", p0, "Flip probability of 0-bits")->required();
    oracle_cmd->add_option("--p1", p1, "Flip probability of 1-bits")->required();
    oracle_cmd->add_option("--samples", samples, "Monte Carlo samples (0 = exact only)");
    oracle_cmd->add_option("--seed", oracle_seed, "Monte Carlo seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd)
            return cmd_run(n, target, op, alpha, phase_length, seed, max_evals, trace_path);
        if (*exp_cmd) {
            harness::ExperimentSpec spec;
            if (!preset_name.empty()) spec = harness::preset(preset_name);
            else if (!config_path.empty()) spec = harness::parse_config(read_file(config_path));
            else throw std::invalid_argument("experiment needs a config file or --preset");
            if (!output_override.empty()) spec.output = output_override;
            if (parallelism_override > 0) spec.parallelism = parallelism_override;
            if (runs_override > 0) spec.runs = runs_override;
            const auto cells = harness::run_experiment(spec, &std::cerr);
            std::cout << "wrote " << (spec.output / "runs.csv").string() << " and "
                      << (spec.output / "summary.csv").string() << " (" << cells.size()
                      << " cells)\n";
            return 0;
        }
        if (*cmp_cmd) return cmd_compare(cmp_a, cmp_b);
        if (*lemma_cmd) return cmd_verify_lemma(lemma_alpha, lemma_parallelism, lemma_output);
        if (*oracle_cmd) return cmd_oracle(profile_v, p0, p1, samples, oracle_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
