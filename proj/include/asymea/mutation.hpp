#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "asymea/bitstring.hpp"
#include "asymea/random.hpp"

namespace asymea {

/// Per-bit flip probabilities: p0 for 0-bits, p1 for 1-bits.
struct ProbabilityPair {
    double p0 = 0.0;
    double p1 = 0.0;

    /// Throws std::invalid_argument unless both components lie in [0, 1].
    static ProbabilityPair checked(double p0, double p1);

    friend bool operator==(const ProbabilityPair&, const ProbabilityPair&) = default;
};

/// (strength0 / zeros, strength1 / ones); an empty class gets probability 0.
ProbabilityPair pair_from_strengths(double strength0, double strength1, std::size_t zeros,
                                    std::size_t ones) noexcept;

/// The static asymmetric pair (1/(2 zeros(x)), 1/(2 ones(x))).
ProbabilityPair static_pair(std::size_t zeros, std::size_t ones) noexcept;
inline ProbabilityPair static_pair(const BitString& x) noexcept {
    return static_pair(x.count_zeros(), x.count_ones());
}

enum class Operator { standard, static_asym, self_adjusting_asym };

std::string_view to_string(Operator op) noexcept;
/// Accepts `standard`, `static-asym`, `self-adjusting-asym`.
Operator parse_operator(std::string_view name);

/// Positions selected for flipping; distinct, order unspecified.
using FlipSet = std::vector<std::uint32_t>;

/// Skip-sampling of flip sets. Holds per-class caches of the skip constants,
/// so one sampler should live as long as the search it serves.
class FlipSampler {
public:
    /// Standard bit mutation: each of n positions independently with probability 1/n.
    template <Bit64Generator G>
    void standard(std::size_t n, G& rng, FlipSet& out) {
        out.clear();
        const double p = 1.0 / static_cast<double>(n);
        for_each_bernoulli_hit(n, p, params(zero_cache_, n, p), rng,
                               [&](std::size_t j) { out.push_back(static_cast<std::uint32_t>(j)); });
    }

    /// Asymmetric mutation: every 0-bit with probability p0 and every 1-bit with p1.
    template <Bit64Generator G>
    void asymmetric(const IndexedBitString& x, ProbabilityPair pair, G& rng, FlipSet& out) {
        out.clear();
        const std::size_t zeros = x.count_zeros();
        const std::size_t ones = x.count_ones();
        for_each_bernoulli_hit(zeros, pair.p0, params(zero_cache_, zeros, pair.p0), rng,
                               [&](std::size_t k) { out.push_back(x.zero_at(k)); });
        for_each_bernoulli_hit(ones, pair.p1, params(one_cache_, ones, pair.p1), rng,
                               [&](std::size_t k) { out.push_back(x.one_at(k)); });
    }

private:
    static SkipParams params(SkipCache& cache, std::size_t m, double p) noexcept {
        return (m > 0 && p > 0.0 && p < 1.0) ? cache.get(m, p) : SkipParams{};
    }

    SkipCache zero_cache_;
    SkipCache one_cache_;
};

template <Bit64Generator G>
void sample_standard_flips(std::size_t n, G& rng, FlipSet& out) {
    FlipSampler().standard(n, rng, out);
}

template <Bit64Generator G>
void sample_asymmetric_flips(const IndexedBitString& x, ProbabilityPair pair, G& rng,
                             FlipSet& out) {
    FlipSampler().asymmetric(x, pair, rng, out);
}

/// Per-bit Bernoulli samplers. O(n) per call; kept as the reference the
/// skipping samplers are tested and benchmarked against.
namespace reference {

template <Bit64Generator G>
void bernoulli_standard_flips(std::size_t n, G& rng, FlipSet& out) {
    out.clear();
    const double p = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        if (uniform_open_closed(rng) <= p) out.push_back(static_cast<std::uint32_t>(i));
}

template <Bit64Generator G>
void bernoulli_asymmetric_flips(const BitString& x, ProbabilityPair pair, G& rng, FlipSet& out) {
    out.clear();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double p = x[i] ? pair.p1 : pair.p0;
        if (uniform_open_closed(rng) <= p) out.push_back(static_cast<std::uint32_t>(i));
    }
}

}  // namespace reference

template <Bit64Generator G>
BitString standard_mutate(const BitString& x, G& rng) {
    FlipSet flips;
    sample_standard_flips(x.size(), rng, flips);
    BitString y = x;
    for (auto i : flips) y.flip(i);
    return y;
}

/// Builds the class index in O(n); the EA loop keeps an IndexedBitString
/// instead and samples flip sets directly.
template <Bit64Generator G>
BitString asymmetric_mutate(const BitString& x, ProbabilityPair pair, G& rng) {
    const IndexedBitString indexed(x);
    FlipSet flips;
    sample_asymmetric_flips(indexed, pair, rng, flips);
    BitString y = x;
    for (auto i : flips) y.flip(i);
    return y;
}

}  // namespace asymea
