#include "asymea/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "asymea/controller.hpp"

namespace asymea::oracle {

namespace {

using Dist = std::vector<long double>;

Dist binomial_pmf(std::uint64_t m, long double p) {
    Dist pmf(m + 1, 0.0L);
    if (p <= 0.0L) {
        pmf[0] = 1.0L;
        return pmf;
    }
    if (p >= 1.0L) {
        pmf[m] = 1.0L;
        return pmf;
    }
    const long double log_p = std::log(p);
    const long double log_q = std::log1p(-p);
    const long double log_m_fact = std::lgamma(static_cast<long double>(m) + 1.0L);
    for (std::uint64_t k = 0; k <= m; ++k) {
        const auto kk = static_cast<long double>(k);
        const auto rest = static_cast<long double>(m - k);
        pmf[k] = std::exp(log_m_fact - std::lgamma(kk + 1.0L) - std::lgamma(rest + 1.0L) +
                          kk * log_p + rest * log_q);
    }
    return pmf;
}

Dist convolve(const Dist& a, const Dist& b) {
    Dist out(a.size() + b.size() - 1, 0.0L);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0L) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

double exact_success_probability(const BitProfile& profile, ProbabilityPair pair) {
    pair = ProbabilityPair::checked(pair.p0, pair.p1);
    const long double p0 = pair.p0;
    const long double p1 = pair.p1;

    // Flipping an incorrect bit gains one; flipping a correct bit loses one.
    const Dist gain = convolve(binomial_pmf(profile.n01, p0), binomial_pmf(profile.n10, p1));
    const Dist loss = convolve(binomial_pmf(profile.n00, p0), binomial_pmf(profile.n11, p1));

    // P(gain > loss) = sum_g P(gain = g) P(loss <= g - 1)
    long double total = 0.0L;
    long double loss_cdf = 0.0L;
    for (std::size_t g = 1; g < gain.size(); ++g) {
        if (g - 1 < loss.size()) loss_cdf += loss[g - 1];
        total += gain[g] * loss_cdf;
    }
    if (total < 0.0L) total = 0.0L;
    if (total > 1.0L) total = 1.0L;
    return static_cast<double>(total);
}

McEstimate mc_success_probability(const BitProfile& profile, ProbabilityPair pair,
                                  std::uint64_t samples, Rng& rng) {
    pair = ProbabilityPair::checked(pair.p0, pair.p1);
    if (samples == 0) throw std::invalid_argument("samples must be positive");
    if (profile.size() == 0) throw std::invalid_argument("profile must describe at least one bit");

    // x = 0^{n00 + n01} 1^{n10 + n11}; a matches x on the n00 and n11 blocks.
    BitString x(profile.size());
    BitString a(profile.size());
    std::size_t i = profile.n00;
    for (std::uint64_t k = 0; k < profile.n01; ++k, ++i) a.flip(i);
    for (std::uint64_t k = 0; k < profile.n10; ++k, ++i) x.flip(i);
    for (std::uint64_t k = 0; k < profile.n11; ++k, ++i) {
        x.flip(i);
        a.flip(i);
    }

    const IndexedBitString indexed(x);
    FlipSampler sampler;
    FlipSet flips;
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        sampler.asymmetric(indexed, pair, rng, flips);
        std::int64_t delta = 0;
        for (auto pos : flips) delta += (x[pos] != a[pos]) ? 1 : -1;
        if (delta > 0) ++hits;
    }

    McEstimate est;
    est.samples = samples;
    est.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
    return est;
}

bool lemma1_valid(std::uint64_t zeros, std::uint64_t ones, double r0, double beta) noexcept {
    if (zeros < 1 || ones < 1) return false;
    if (!(r0 >= 0.0 && r0 <= 1.0)) return false;
    const double r1 = 1.0 - r0;
    if (!(beta >= 0.0 && beta <= r1)) return false;
    const auto z = static_cast<double>(zeros);
    const auto o = static_cast<double>(ones);
    return (r0 + beta) / z <= 1.0 && r1 / o <= 1.0;
}

LemmaCheck lemma1_check(std::uint64_t zeros, std::uint64_t ones, double r0, double beta) {
    if (!lemma1_valid(zeros, ones, r0, beta))
        throw std::invalid_argument("lemma1_check: parameters yield no valid probability pair");
    const double r1 = 1.0 - r0;
    const BitProfile onemax{0, zeros, 0, ones};

    LemmaCheck out;
    out.lhs = exact_success_probability(onemax, pair_from_strengths(r0 + beta, r1 - beta, zeros, ones));
    out.rhs = exact_success_probability(onemax, pair_from_strengths(r0, r1, zeros, ones)) +
              r1 * r0 * -std::expm1(-beta);
    out.satisfied = out.lhs >= out.rhs - kLemmaSlack;
    return out;
}

LemmaGrid LemmaGrid::standard(double alpha) {
    LemmaGrid g;
    g.zeros = {1, 2, 5, 10, 100, 1000};
    g.ones = g.zeros;
    const StrengthController c(alpha, 2);
    for (std::uint32_t k = 0; k <= c.grid_top(); ++k) g.r0.push_back(c.strength_at(k));
    g.beta = {0.0, alpha / 2, alpha, 1.5 * alpha};
    return g;
}

namespace {

std::vector<LemmaRow> valid_rows(const LemmaGrid& grid) {
    std::vector<LemmaRow> rows;
    for (auto z : grid.zeros)
        for (auto o : grid.ones)
            for (auto r0 : grid.r0)
                for (auto beta : grid.beta)
                    if (lemma1_valid(z, o, r0, beta)) rows.push_back({z, o, r0, beta, {}});
    return rows;
}

}  // namespace

std::vector<LemmaRow> lemma1_sweep(const LemmaGrid& grid, int parallelism) {
    if (parallelism < 1) throw std::invalid_argument("parallelism must be positive");
    auto rows = valid_rows(grid);
    const auto count = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(dynamic) num_threads(parallelism)
    for (std::int64_t i = 0; i < count; ++i) {
        auto& r = rows[static_cast<std::size_t>(i)];
        r.check = lemma1_check(r.zeros, r.ones, r.r0, r.beta);
    }
    return rows;
}

std::vector<LemmaRow> lemma1_sweep_serial(const LemmaGrid& grid) {
    auto rows = valid_rows(grid);
    for (auto& r : rows) r.check = lemma1_check(r.zeros, r.ones, r.r0, r.beta);
    return rows;
}

}  // namespace asymea::oracle
