#include "asymea/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace asymea::stats {

SampleSummary summarize(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("summarize: empty sample");
    SampleSummary s;
    s.count = samples.size();
    s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(s.count);
    if (s.count > 1) {
        double ss = 0.0;
        for (double x : samples) ss += (x - s.mean) * (x - s.mean);
        s.std = std::sqrt(ss / static_cast<double>(s.count - 1));
    }
    return s;
}

namespace {

struct Pooled {
    std::vector<std::int64_t> twice_rank_a;  // doubled midranks, integral
    std::vector<std::int64_t> twice_rank_b;
    double tie_term = 0.0;                   // sum over tie groups of t^3 - t
};

Pooled pooled_ranks(std::span<const double> a, std::span<const double> b) {
    struct Item {
        double value;
        bool from_a;
    };
    std::vector<Item> items;
    items.reserve(a.size() + b.size());
    for (double v : a) items.push_back({v, true});
    for (double v : b) items.push_back({v, false});
    std::sort(items.begin(), items.end(),
              [](const Item& l, const Item& r) { return l.value < r.value; });

    Pooled out;
    std::size_t i = 0;
    while (i < items.size()) {
        std::size_t j = i;
        while (j < items.size() && items[j].value == items[i].value) ++j;
        // Ranks i+1 .. j share midrank (i + 1 + j) / 2.
        const auto twice_mid = static_cast<std::int64_t>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k)
            (items[k].from_a ? out.twice_rank_a : out.twice_rank_b).push_back(twice_mid);
        const auto t = static_cast<double>(j - i);
        out.tie_term += t * t * t - t;
        i = j;
    }
    return out;
}

// Distribution of doubled rank sums over all size-m subsets of `twice_ranks`,
// each subset equally likely. Index = doubled rank sum.
std::vector<long double> subset_sum_distribution(const std::vector<std::int64_t>& twice_ranks,
                                                 std::size_t m) {
    std::vector<std::int64_t> sorted = twice_ranks;
    std::sort(sorted.rbegin(), sorted.rend());
    const auto max_sum = std::accumulate(sorted.begin(), sorted.begin() + static_cast<long>(m),
                                         std::int64_t{0});
    const auto width = static_cast<std::size_t>(max_sum) + 1;

    // ways[k * width + s]: number of k-subsets of the items seen so far with doubled sum s.
    std::vector<long double> ways((m + 1) * width, 0.0L);
    ways[0] = 1.0L;
    std::size_t seen = 0;
    for (auto r : twice_ranks) {
        ++seen;
        const auto rr = static_cast<std::size_t>(r);
        for (std::size_t k = std::min(m, seen); k >= 1; --k) {
            long double* dst = &ways[k * width];
            const long double* src = &ways[(k - 1) * width];
            for (std::size_t s = width; s-- > rr;) dst[s] += src[s - rr];
        }
    }
    std::vector<long double> dist(ways.begin() + static_cast<long>(m * width), ways.end());
    const long double total = std::accumulate(dist.begin(), dist.end(), 0.0L);
    for (auto& d : dist) d /= total;
    return dist;
}

double exact_p(const Pooled& pooled, std::size_t na, std::size_t nb, double u) {
    // Work in doubled U so that half-integers from ties stay integral.
    const bool a_small = na <= nb;
    const std::size_t m = a_small ? na : nb;
    std::vector<std::int64_t> all = pooled.twice_rank_a;
    all.insert(all.end(), pooled.twice_rank_b.begin(), pooled.twice_rank_b.end());
    const auto dist = subset_sum_distribution(all, m);

    const auto nm = static_cast<std::int64_t>(m);
    const auto twice_nanb = static_cast<std::int64_t>(2 * na * nb);
    const auto twice_u_obs = static_cast<std::int64_t>(std::llround(2.0 * u));

    long double below = 0.0L;  // P(U_a <= u_obs)
    long double above = 0.0L;  // P(U_a >= u_obs)
    for (std::size_t s = 0; s < dist.size(); ++s) {
        if (dist[s] == 0.0L) continue;
        const std::int64_t twice_u_small = static_cast<std::int64_t>(s) - nm * (nm + 1);
        const std::int64_t twice_u_a = a_small ? twice_u_small : twice_nanb - twice_u_small;
        if (twice_u_a <= twice_u_obs) below += dist[s];
        if (twice_u_a >= twice_u_obs) above += dist[s];
    }
    return static_cast<double>(std::min(1.0L, 2.0L * std::min(below, above)));
}

double normal_p(const Pooled& pooled, std::size_t na, std::size_t nb, double u) {
    const auto a = static_cast<double>(na);
    const auto b = static_cast<double>(nb);
    const double n = a + b;
    const double mean = a * b / 2.0;
    double var = a * b / 12.0 * (n + 1.0);
    if (n > 1.0) var -= a * b / 12.0 * pooled.tie_term / (n * (n - 1.0));
    if (var <= 0.0) return 1.0;
    const double z = std::max(0.0, std::abs(u - mean) - 0.5) / std::sqrt(var);
    return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

}  // namespace

MannWhitneyResult mann_whitney_u(std::span<const double> sample_a,
                                 std::span<const double> sample_b, PValueMethod method) {
    if (sample_a.empty() || sample_b.empty())
        throw std::invalid_argument("mann_whitney_u: both samples must be nonempty");
    const std::size_t na = sample_a.size();
    const std::size_t nb = sample_b.size();
    const Pooled pooled = pooled_ranks(sample_a, sample_b);

    const auto twice_rank_sum =
        std::accumulate(pooled.twice_rank_a.begin(), pooled.twice_rank_a.end(), std::int64_t{0});
    MannWhitneyResult r;
    r.u = static_cast<double>(twice_rank_sum) / 2.0 - static_cast<double>(na * (na + 1)) / 2.0;

    const bool use_exact = method == PValueMethod::exact ||
                           (method == PValueMethod::automatic && std::min(na, nb) < kExactThreshold);
    r.exact = use_exact;
    r.p_two_sided = use_exact ? exact_p(pooled, na, nb, r.u) : normal_p(pooled, na, nb, r.u);
    r.p_two_sided = std::max(r.p_two_sided, std::numeric_limits<double>::min());
    return r;
}

}  // namespace asymea::stats
