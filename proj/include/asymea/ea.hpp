#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "asymea/bitstring.hpp"
#include "asymea/controller.hpp"
#include "asymea/fitness.hpp"
#include "asymea/mutation.hpp"

namespace asymea {

struct RunConfig {
    explicit RunConfig(Target t) : target(std::move(t)) {}

    Target target;
    Operator op = Operator::standard;
    double alpha = 0.1;
    std::uint32_t phase_length = 50;
    std::uint64_t seed = 0;
    /// Defaults to 10^4 * n when unset.
    std::optional<std::uint64_t> max_evaluations;
    /// Record one PhaseRecord per completed phase (self-adjusting only).
    bool trace = false;
    /// Overrides the uniformly random initial search point.
    std::optional<BitString> initial;

    std::size_t n() const noexcept { return target.size(); }
    std::uint64_t evaluation_cap() const noexcept {
        return max_evaluations.value_or(std::uint64_t{10000} * n());
    }
    /// Throws std::invalid_argument on an unusable configuration.
    void validate() const;
};

struct RunRecord {
    /// Offspring evaluations until the optimum was first evaluated; empty when
    /// the cap was reached first. 0 if the initial point is optimal.
    std::optional<std::uint64_t> evaluations;
    std::uint64_t seed = 0;
    std::size_t final_fitness = 0;
    std::uint64_t improvements = 0;
    std::vector<PhaseRecord> strength_trace;

    bool reached_optimum() const noexcept { return evaluations.has_value(); }
    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// One (1+1) EA run. Deterministic given config.seed.
RunRecord run(const RunConfig& config);

/// `runs` independent runs; run i is seeded with derive_seed(master_seed, i).
/// Runs are distributed over `parallelism` OpenMP threads; the result does not
/// depend on the thread count. Records come back in run-index order.
std::vector<RunRecord> run_batch(const RunConfig& config, std::uint64_t runs,
                                 std::uint64_t master_seed, int parallelism);

/// Single-threaded reference for run_batch.
std::vector<RunRecord> run_batch_serial(const RunConfig& config, std::uint64_t runs,
                                        std::uint64_t master_seed);

/// Fraction of traced phases with index > after_phase whose r0 was the top
/// grid strength. Empty when no such phase exists.
std::optional<double> fraction_at_max_strength(const RunRecord& record, double alpha,
                                               std::uint64_t after_phase);

}  // namespace asymea
