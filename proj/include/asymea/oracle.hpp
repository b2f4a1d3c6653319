#pragma once

#include <cstdint>
#include <vector>

#include "asymea/fitness.hpp"
#include "asymea/mutation.hpp"
#include "asymea/random.hpp"

namespace asymea::oracle {

/// Slack used when comparing the two sides of the strength inequality.
inline constexpr double kLemmaSlack = 1e-9;

/// P(strict improvement) for a search point with the given profile under
/// asymmetric mutation with `pair`. The fitness gain is
///   Bin(n01, p0) + Bin(n10, p1) - Bin(n00, p0) - Bin(n11, p1)
/// and the result is P(gain > 0), obtained by exact convolution of the
/// binomial distributions in extended precision. O(n^2).
/// Throws std::invalid_argument if a probability lies outside [0, 1].
double exact_success_probability(const BitProfile& profile, ProbabilityPair pair);

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;  // sqrt(p_hat (1 - p_hat) / samples)
    std::uint64_t samples = 0;
};

/// Monte Carlo estimate of the same quantity: builds a concrete (x, a) with
/// the profile and applies asymmetric mutation `samples` times.
McEstimate mc_success_probability(const BitProfile& profile, ProbabilityPair pair,
                                  std::uint64_t samples, Rng& rng);

struct LemmaCheck {
    double lhs = 0.0;  // P(S) at ((r0 + beta)/zeros, (r1 - beta)/ones)
    double rhs = 0.0;  // P(S) at (r0/zeros, r1/ones) + r0 r1 (1 - e^-beta)
    double margin() const noexcept { return lhs - rhs; }
    bool satisfied = false;
};

/// True when (zeros, ones, r0, beta) is a legal input to lemma1_check.
bool lemma1_valid(std::uint64_t zeros, std::uint64_t ones, double r0, double beta) noexcept;

/// Checks on OneMax (target all-ones, so every 0-bit is incorrect and every
/// 1-bit correct) that shifting beta of strength from 1-bits to 0-bits raises
/// the success probability by at least r0 r1 (1 - e^-beta). r1 = 1 - r0.
/// Throws std::invalid_argument on invalid parameters.
LemmaCheck lemma1_check(std::uint64_t zeros, std::uint64_t ones, double r0, double beta);

struct LemmaGrid {
    std::vector<std::uint64_t> zeros;
    std::vector<std::uint64_t> ones;
    std::vector<double> r0;
    std::vector<double> beta;

    /// zeros, ones in {1, 2, 5, 10, 100, 1000}; r0 on the controller grid
    /// for `alpha`; beta in {0, alpha/2, alpha, 3 alpha/2}.
    static LemmaGrid standard(double alpha = 0.1);
};

struct LemmaRow {
    std::uint64_t zeros = 0;
    std::uint64_t ones = 0;
    double r0 = 0.0;
    double beta = 0.0;
    LemmaCheck check;
};

/// Checks every valid grid combination, parallelised over combinations.
/// Rows come back in grid order (zeros, ones, r0, beta nested outer to inner).
std::vector<LemmaRow> lemma1_sweep(const LemmaGrid& grid, int parallelism);

/// Single-threaded reference for lemma1_sweep.
std::vector<LemmaRow> lemma1_sweep_serial(const LemmaGrid& grid);

}  // namespace asymea::oracle
