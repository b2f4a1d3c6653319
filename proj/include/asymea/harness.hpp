#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asymea/ea.hpp"
#include "asymea/mutation.hpp"
#include "asymea/stats.hpp"

namespace asymea::harness {

struct ExperimentSpec {
    std::vector<std::size_t> n_values;
    std::vector<Operator> algorithms;
    std::string target = "all-ones";
    std::uint64_t runs = 1000;
    double alpha = 0.1;
    std::uint32_t phase_length = 50;
    std::uint64_t master_seed = 1;
    std::filesystem::path output = "results";
    int parallelism = 1;
    std::optional<std::uint64_t> max_evaluations;
    bool trace = false;

    /// Throws std::invalid_argument naming the first invalid field.
    void validate() const;
};

/// Number of threads OpenMP would use by default.
int available_parallelism();

/// Parses the flat `key = value` format (see README). Lists are written
/// `[a, b, c]`; `#` starts a comment. Unset fields take the defaults above,
/// with parallelism defaulting to available_parallelism().
/// Errors are std::invalid_argument with a message starting with the field name.
ExperimentSpec parse_config(std::string_view text);

/// Named presets: `quick`, `onemax` (all-ones, n = 8000..20000), `half-split`.
ExperimentSpec preset(std::string_view name);

/// Seed of the (algorithm, n) cell; runs inside the cell derive from it.
std::uint64_t cell_seed(std::uint64_t master_seed, Operator op, std::size_t n);

struct CellResult {
    Operator op = Operator::standard;
    std::size_t n = 0;
    std::vector<RunRecord> records;
    stats::SampleSummary summary;  // over runs that reached the optimum
    std::uint64_t capped = 0;
};

/// Runs every (algorithm, n) cell and writes `runs.csv` and `summary.csv`
/// (plus `trace.csv` when tracing) into spec.output. Each cell is flushed as
/// soon as it completes. Progress lines go to `log` when given.
/// I/O failures throw std::runtime_error naming the path.
std::vector<CellResult> run_experiment(const ExperimentSpec& spec, std::ostream* log = nullptr);

// CSV surfaces.

inline constexpr std::string_view kRunHeader =
    "algorithm,n,target,alpha,N,run_id,seed,evaluations,final_fitness";
inline constexpr std::string_view kSummaryHeader = "algorithm,n,runs,mean,std";
inline constexpr std::string_view kTraceHeader = "run_id,phase,r0,b,direction";
inline constexpr std::string_view kCapReached = "cap-reached";

struct RunRow {
    std::string algorithm;
    std::size_t n = 0;
    std::string target;
    double alpha = 0.0;
    std::uint32_t phase_length = 0;
    std::uint64_t run_id = 0;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> evaluations;
    std::size_t final_fitness = 0;
};

struct RunContext {
    Operator op;
    std::size_t n;
    std::string target;
    double alpha;
    std::uint32_t phase_length;
};

void write_run_rows(std::ostream& out, const RunContext& ctx, const std::vector<RunRecord>& records);
void write_summary_row(std::ostream& out, Operator op, std::size_t n,
                       const stats::SampleSummary& summary);
void write_trace_rows(std::ostream& out, const std::vector<RunRecord>& records,
                      std::uint64_t first_run_id = 0);

/// Parses a run CSV (header required). Throws std::runtime_error with the
/// line number on malformed input.
std::vector<RunRow> read_run_csv(std::istream& in);
std::vector<RunRow> read_run_csv(const std::filesystem::path& path);

/// Evaluation counts of the rows that reached the optimum.
std::vector<double> evaluations_of(const std::vector<RunRow>& rows);

}  // namespace asymea::harness
