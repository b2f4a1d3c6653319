#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>

namespace asymea {

using Rng = std::mt19937_64;

/// Generators that emit full 64-bit words. Everything random in the library
/// consumes raw words so that results do not depend on the standard library's
/// distribution implementations.
template <class G>
concept Bit64Generator =
    std::uniform_random_bit_generator<G> && (G::min() == 0) &&
    (G::max() == std::numeric_limits<std::uint64_t>::max());

/// Uniform double in (0, 1].
template <Bit64Generator G>
inline double uniform_open_closed(G& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

template <Bit64Generator G>
inline bool fair_coin(G& rng) {
    return (rng() >> 63) != 0;
}

/// Constants of the geometric skip for m trials at rate p: log(1 - p) and the
/// probability (1 - p)^m of no hit at all.
struct SkipParams {
    double log_q = 0.0;
    double none = 1.0;
};

inline SkipParams skip_params(std::size_t m, double p) noexcept {
    const double log_q = std::log1p(-p);
    return {log_q, std::exp(static_cast<double>(m) * log_q)};
}

/// Calls `hit(j)` for every j in [0, m) independently with probability p, in
/// increasing order. Geometric gap skipping: cost is O(1 + hits). `params`
/// must equal skip_params(m, p) whenever 0 < p < 1.
template <Bit64Generator G, class F>
inline void for_each_bernoulli_hit(std::size_t m, double p, const SkipParams& params, G& rng,
                                   F&& hit) {
    if (m == 0 || p <= 0.0) return;
    if (p >= 1.0) {
        for (std::size_t j = 0; j < m; ++j) hit(j);
        return;
    }
    const double limit = static_cast<double>(m);
    // The first gap reaches past m exactly when u <= (1 - p)^m; that common
    // case needs no logarithm.
    double u = uniform_open_closed(rng);
    if (u <= params.none) return;
    double next = -1.0;
    for (;;) {
        next += 1.0 + std::floor(std::log(u) / params.log_q);
        if (next >= limit) return;
        hit(static_cast<std::size_t>(next));
        u = uniform_open_closed(rng);
    }
}

template <Bit64Generator G, class F>
inline void for_each_bernoulli_hit(std::size_t m, double p, G& rng, F&& hit) {
    const SkipParams params = (p > 0.0 && p < 1.0) ? skip_params(m, p) : SkipParams{};
    for_each_bernoulli_hit(m, p, params, rng, std::forward<F>(hit));
}

/// Small cache of SkipParams keyed by (m, p). The EA reuses a handful of
/// (count, probability) combinations between accepted moves.
class SkipCache {
public:
    const SkipParams& get(std::size_t m, double p) noexcept {
        for (const auto& e : entries_)
            if (e.m == m && e.p == p) return e.params;
        Entry& e = entries_[next_];
        next_ = (next_ + 1) % entries_.size();
        e = {m, p, skip_params(m, p)};
        return e.params;
    }

private:
    struct Entry {
        std::size_t m = 0;
        double p = -1.0;
        SkipParams params;
    };
    std::array<Entry, 4> entries_{};
    std::size_t next_ = 0;
};

/// Per-run seed for run `index` of a batch keyed by `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace asymea
