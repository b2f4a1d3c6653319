#pragma once

#include <cstdint>
#include <span>

namespace asymea::stats {

struct SampleSummary {
    std::uint64_t count = 0;
    double mean = 0.0;
    double std = 0.0;  // Bessel-corrected; 0 for a single sample
};

/// Throws std::invalid_argument on empty input.
SampleSummary summarize(std::span<const double> samples);

enum class PValueMethod {
    automatic,  // exact when min(|a|, |b|) < 20, normal approximation otherwise
    exact,
    normal,
};

struct MannWhitneyResult {
    double u = 0.0;          // U for sample_a: #{a > b} + #{a == b} / 2
    double p_two_sided = 1.0;
    bool exact = false;      // which path produced p
};

inline constexpr std::size_t kExactThreshold = 20;

/// Mann-Whitney U rank-sum test with midranks for ties.
///
/// The exact path counts all C(na + nb, na) assignments of the pooled
/// midranks to sample a (by dynamic programming over rank sums, so ties are
/// handled exactly). The normal path uses the tie-corrected variance and a
/// continuity correction of 1/2. Two-sided p = min(1, 2 min(P(U <= u), P(U >= u))).
/// Throws std::invalid_argument if either sample is empty.
MannWhitneyResult mann_whitney_u(std::span<const double> sample_a,
                                 std::span<const double> sample_b,
                                 PValueMethod method = PValueMethod::automatic);

}  // namespace asymea::stats
