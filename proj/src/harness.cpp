#include "asymea/harness.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <omp.h>

namespace asymea::harness {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void field_error(std::string_view field, const std::string& what) {
    throw std::invalid_argument(std::string(field) + ": " + what);
}

template <class T>
T parse_number(std::string_view field, std::string_view text) {
    text = trim(text);
    T value{};
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        field_error(field, "cannot parse '" + std::string(text) + "' as a number");
    return value;
}

// from_chars for double is missing from older libstdc++.
double parse_double(std::string_view field, std::string_view text) {
    const std::string s(trim(text));
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        field_error(field, "cannot parse '" + s + "' as a number");
    }
    if (used != s.size()) field_error(field, "cannot parse '" + s + "' as a number");
    return v;
}

std::vector<std::string_view> split_list(std::string_view field, std::string_view value) {
    value = trim(value);
    if (value.starts_with('[')) {
        if (!value.ends_with(']')) field_error(field, "unterminated list");
        value = value.substr(1, value.size() - 2);
    }
    std::vector<std::string_view> items;
    while (!value.empty()) {
        const auto comma = value.find(',');
        const auto item = trim(value.substr(0, comma));
        if (item.empty()) field_error(field, "empty list element");
        items.push_back(item);
        if (comma == std::string_view::npos) break;
        value = value.substr(comma + 1);
    }
    return items;
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string format_short(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::ofstream open_output(const std::filesystem::path& path, bool append) {
    std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    return out;
}

void check_stream(const std::ostream& out, const std::filesystem::path& path) {
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace

void ExperimentSpec::validate() const {
    if (n_values.empty()) field_error("n_values", "must name at least one length");
    for (auto n : n_values)
        if (n == 0) field_error("n_values", "lengths must be positive");
    if (algorithms.empty()) field_error("algorithms", "must name at least one algorithm");
    if (runs == 0) field_error("runs", "must be positive");
    if (!(alpha > 0.0 && alpha < 0.25)) field_error("alpha", "must lie in (0, 1/4)");
    if (phase_length < 2 || phase_length % 2 != 0) field_error("N", "must be even and at least 2");
    if (parallelism < 1) field_error("parallelism", "must be positive");
    if (max_evaluations && *max_evaluations == 0) field_error("max_evaluations", "must be positive");
    for (auto n : n_values) {
        try {
            Target::parse(target, n);
        } catch (const std::invalid_argument& e) {
            field_error("target", e.what());
        }
    }
}

int available_parallelism() { return omp_get_max_threads(); }

ExperimentSpec parse_config(std::string_view text) {
    ExperimentSpec spec;
    spec.parallelism = available_parallelism();
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));

        if (key == "n_values") {
            spec.n_values.clear();
            for (auto item : split_list(key, value))
                spec.n_values.push_back(parse_number<std::size_t>(key, item));
        } else if (key == "algorithms") {
            spec.algorithms.clear();
            for (auto item : split_list(key, value)) {
                try {
                    spec.algorithms.push_back(parse_operator(item));
                } catch (const std::invalid_argument& e) {
                    field_error(key, e.what());
                }
            }
        } else if (key == "target") {
            spec.target = std::string(value);
        } else if (key == "runs") {
            spec.runs = parse_number<std::uint64_t>(key, value);
        } else if (key == "alpha") {
            spec.alpha = parse_double(key, value);
        } else if (key == "N" || key == "phase_length") {
            spec.phase_length = parse_number<std::uint32_t>("N", value);
        } else if (key == "master_seed") {
            spec.master_seed = parse_number<std::uint64_t>(key, value);
        } else if (key == "output") {
            spec.output = std::string(value);
        } else if (key == "parallelism") {
            spec.parallelism = parse_number<int>(key, value);
        } else if (key == "max_evaluations") {
            spec.max_evaluations = parse_number<std::uint64_t>(key, value);
        } else if (key == "trace") {
            if (value == "true") spec.trace = true;
            else if (value == "false") spec.trace = false;
            else field_error(key, "expected true or false");
        } else {
            field_error(key, "unknown field");
        }
    }
    spec.validate();
    return spec;
}

ExperimentSpec preset(std::string_view name) {
    ExperimentSpec spec;
    spec.parallelism = available_parallelism();
    spec.algorithms = {Operator::standard, Operator::static_asym, Operator::self_adjusting_asym};
    if (name == "quick") {
        spec.n_values = {1000, 2000, 4000};
        spec.runs = 100;
        spec.output = "results-quick";
    } else if (name == "onemax") {
        spec.n_values = {8000, 10000, 12000, 14000, 16000, 18000, 20000};
        spec.output = "results-onemax";
    } else if (name == "half-split") {
        spec.n_values = {8000, 10000, 12000, 14000, 16000, 18000, 20000};
        spec.target = "half-split";
        spec.output = "results-half-split";
    } else {
        throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
    }
    return spec;
}

std::uint64_t cell_seed(std::uint64_t master_seed, Operator op, std::size_t n) {
    return derive_seed(derive_seed(master_seed, static_cast<std::uint64_t>(op)), n);
}

std::vector<CellResult> run_experiment(const ExperimentSpec& spec, std::ostream* log) {
    spec.validate();
    std::error_code ec;
    std::filesystem::create_directories(spec.output, ec);
    if (ec) throw std::runtime_error("cannot create '" + spec.output.string() + "': " + ec.message());

    const auto runs_path = spec.output / "runs.csv";
    const auto summary_path = spec.output / "summary.csv";
    {
        auto runs_out = open_output(runs_path, false);
        runs_out << kRunHeader << '\n';
        check_stream(runs_out, runs_path);
        auto summary_out = open_output(summary_path, false);
        summary_out << kSummaryHeader << '\n';
        check_stream(summary_out, summary_path);
    }

    std::vector<CellResult> cells;
    for (auto op : spec.algorithms) {
        for (auto n : spec.n_values) {
            RunConfig config(Target::parse(spec.target, n));
            config.op = op;
            config.alpha = spec.alpha;
            config.phase_length = spec.phase_length;
            config.max_evaluations = spec.max_evaluations;
            config.trace = spec.trace && op == Operator::self_adjusting_asym;

            CellResult cell;
            cell.op = op;
            cell.n = n;
            cell.records =
                run_batch(config, spec.runs, cell_seed(spec.master_seed, op, n), spec.parallelism);

            std::vector<double> evals;
            for (const auto& r : cell.records) {
                if (r.evaluations) evals.push_back(static_cast<double>(*r.evaluations));
                else ++cell.capped;
            }
            if (!evals.empty()) cell.summary = stats::summarize(evals);

            {
                auto out = open_output(runs_path, true);
                write_run_rows(out, {op, n, spec.target, spec.alpha, spec.phase_length},
                               cell.records);
                check_stream(out, runs_path);
            }
            {
                auto out = open_output(summary_path, true);
                write_summary_row(out, op, n, cell.summary);
                check_stream(out, summary_path);
            }
            if (config.trace) {
                const auto trace_path = spec.output / ("trace_" + std::string(to_string(op)) + "_" +
                                                       std::to_string(n) + ".csv");
                auto out = open_output(trace_path, false);
                out << kTraceHeader << '\n';
                write_trace_rows(out, cell.records);
                check_stream(out, trace_path);
            }
            if (log) {
                *log << to_string(op) << " n=" << n << " runs=" << spec.runs
                     << " mean=" << cell.summary.mean << " std=" << cell.summary.std;
                if (cell.capped) *log << " capped=" << cell.capped;
                *log << '\n';
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

void write_run_rows(std::ostream& out, const RunContext& ctx,
                    const std::vector<RunRecord>& records) {
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out << to_string(ctx.op) << ',' << ctx.n << ',' << ctx.target << ','
            << format_short(ctx.alpha) << ',' << ctx.phase_length << ',' << i << ',' << r.seed
            << ',';
        if (r.evaluations) out << *r.evaluations;
        else out << kCapReached;
        out << ',' << r.final_fitness << '\n';
    }
}

void write_summary_row(std::ostream& out, Operator op, std::size_t n,
                       const stats::SampleSummary& summary) {
    out << to_string(op) << ',' << n << ',' << summary.count << ',' << format_double(summary.mean)
        << ',' << format_double(summary.std) << '\n';
}

void write_trace_rows(std::ostream& out, const std::vector<RunRecord>& records,
                      std::uint64_t first_run_id) {
    for (std::size_t i = 0; i < records.size(); ++i)
        for (const auto& p : records[i].strength_trace)
            out << first_run_id + i << ',' << p.phase << ',' << format_double(p.r0) << ',' << p.b
                << ',' << to_string(p.direction) << '\n';
}

std::vector<RunRow> read_run_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line) || trim(line) != kRunHeader)
        throw std::runtime_error("line 1: expected header '" + std::string(kRunHeader) + "'");

    std::vector<RunRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<std::string_view> f;
        std::string_view rest = trim(line);
        for (;;) {
            const auto comma = rest.find(',');
            f.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        try {
            if (f.size() != 9) throw std::invalid_argument("expected 9 fields");
            RunRow r;
            r.algorithm = std::string(f[0]);
            r.n = parse_number<std::size_t>("n", f[1]);
            r.target = std::string(f[2]);
            r.alpha = parse_double("alpha", f[3]);
            r.phase_length = parse_number<std::uint32_t>("N", f[4]);
            r.run_id = parse_number<std::uint64_t>("run_id", f[5]);
            r.seed = parse_number<std::uint64_t>("seed", f[6]);
            if (f[7] != kCapReached) r.evaluations = parse_number<std::uint64_t>("evaluations", f[7]);
            r.final_fitness = parse_number<std::size_t>("final_fitness", f[8]);
            rows.push_back(std::move(r));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return rows;
}

std::vector<RunRow> read_run_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    try {
        return read_run_csv(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

std::vector<double> evaluations_of(const std::vector<RunRow>& rows) {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        if (r.evaluations) out.push_back(static_cast<double>(*r.evaluations));
    return out;
}

}  // namespace asymea::harness
