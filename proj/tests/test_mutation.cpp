#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "asymea/mutation.hpp"
#include "brute_force.hpp"

using namespace asymea;
using Catch::Approx;

namespace {

BitString b(const char* s) { return BitString::from_string(s); }

std::size_t index_of(const BitString& y) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < y.size(); ++i) k = k * 2 + (y[i] ? 1 : 0);
    return k;
}

}  // namespace

TEST_CASE("static_pair") {
    CHECK(static_pair(b("0011")) == ProbabilityPair{0.25, 0.25});
    const auto p = static_pair(b("0001"));
    CHECK(p.p0 == Approx(1.0 / 6.0));
    CHECK(p.p1 == Approx(0.5));
    CHECK(static_pair(b("1111")) == ProbabilityPair{0.0, 0.125});
    CHECK(static_pair(b("000")) == ProbabilityPair{1.0 / 6.0, 0.0});
}

TEST_CASE("ProbabilityPair::checked") {
    CHECK_NOTHROW(ProbabilityPair::checked(0.0, 1.0));
    CHECK_THROWS_AS(ProbabilityPair::checked(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ProbabilityPair::checked(0.5, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(ProbabilityPair::checked(std::nan(""), 0.5), std::invalid_argument);
}

TEST_CASE("operator names") {
    for (auto op : {Operator::standard, Operator::static_asym, Operator::self_adjusting_asym})
        CHECK(parse_operator(to_string(op)) == op);
    CHECK_THROWS_AS(parse_operator("heavy-tailed"), std::invalid_argument);
}

TEST_CASE("standard_mutate always flips the single bit at n = 1") {
    Rng rng(1);
    for (int i = 0; i < 100; ++i) CHECK(standard_mutate(b("0"), rng).to_string() == "1");
}

TEST_CASE("standard_mutate mean flip count at n = 100") {
    Rng rng(2);
    const auto x = b(std::string(100, '0').c_str());
    const int trials = 100000;
    double sum = 0.0;
    for (int i = 0; i < trials; ++i) sum += static_cast<double>(standard_mutate(x, rng).count_ones());
    // Var = n p (1 - p) = 0.99
    CHECK(std::abs(sum / trials - 1.0) <= 3.0 * std::sqrt(0.99 / trials));
}

TEST_CASE("standard_mutate offspring distribution at n = 2") {
    // Each bit flips with probability 1/2: all four offspring equally likely.
    Rng rng(3);
    std::vector<std::uint64_t> counts(4, 0);
    for (int i = 0; i < 100000; ++i) ++counts[index_of(standard_mutate(b("00"), rng))];
    CHECK(testing::chi_square(counts, {0.25, 0.25, 0.25, 0.25}) < testing::kChiSquare999[3]);
}

TEST_CASE("asymmetric_mutate edge pairs") {
    Rng rng(4);
    const auto x = b("0110100");
    for (int i = 0; i < 100; ++i) {
        CHECK(asymmetric_mutate(x, {0.0, 0.0}, rng) == x);
        CHECK(asymmetric_mutate(b("0011"), {1.0, 0.0}, rng).to_string() == "1111");
    }
}

TEST_CASE("asymmetric_mutate offspring distribution from 01 at (1/2, 1/2)") {
    Rng rng(5);
    std::vector<std::uint64_t> counts(4, 0);
    for (int i = 0; i < 100000; ++i) {
        const auto y = asymmetric_mutate(b("01"), {0.5, 0.5}, rng);
        REQUIRE(y.count_ones() == y.recount_ones());
        ++counts[index_of(y)];
    }
    CHECK(testing::chi_square(counts, {0.25, 0.25, 0.25, 0.25}) < testing::kChiSquare999[3]);
}

TEST_CASE("asymmetric_mutate non-uniform exact distribution") {
    // Parent "01" with (p0, p1) = (0.3, 0.6); offspring index = 2*y0 + y1.
    const double p0 = 0.3;
    const double p1 = 0.6;
    const std::vector<double> expected{
        (1 - p0) * p1,        // 00: bit 0 stays, bit 1 flips
        (1 - p0) * (1 - p1),  // 01: nothing flips
        p0 * p1,              // 10
        p0 * (1 - p1),        // 11
    };
    Rng rng(6);
    std::vector<std::uint64_t> counts(4, 0);
    for (int i = 0; i < 100000; ++i) ++counts[index_of(asymmetric_mutate(b("01"), {p0, p1}, rng))];
    CHECK(testing::chi_square(counts, expected) < testing::kChiSquare999[3]);
}

TEST_CASE("expected flips per class match p0 zeros and p1 ones") {
    Rng rng(7);
    const IndexedBitString x(random_uniform(500, rng));
    const ProbabilityPair pair{0.004, 0.01};
    const int trials = 100000;
    double zeros_flipped = 0.0;
    double ones_flipped = 0.0;
    FlipSampler sampler;
    FlipSet flips;
    for (int i = 0; i < trials; ++i) {
        sampler.asymmetric(x, pair, rng, flips);
        for (auto pos : flips) (x.bits()[pos] ? ones_flipped : zeros_flipped) += 1.0;
    }
    const double z = static_cast<double>(x.count_zeros());
    const double o = static_cast<double>(x.count_ones());
    const double sd0 = std::sqrt(z * pair.p0 * (1 - pair.p0) / trials);
    const double sd1 = std::sqrt(o * pair.p1 * (1 - pair.p1) / trials);
    CHECK(std::abs(zeros_flipped / trials - pair.p0 * z) <= 3 * sd0);
    CHECK(std::abs(ones_flipped / trials - pair.p1 * o) <= 3 * sd1);
}

TEST_CASE("static pair flips one bit on average, half per class") {
    Rng rng(8);
    const IndexedBitString x(b("0001111111"));
    const auto pair = static_pair(x.bits());
    const int trials = 200000;
    double zeros_flipped = 0.0;
    double ones_flipped = 0.0;
    FlipSet flips;
    for (int i = 0; i < trials; ++i) {
        sample_asymmetric_flips(x, pair, rng, flips);
        for (auto pos : flips) (x.bits()[pos] ? ones_flipped : zeros_flipped) += 1.0;
    }
    // Var per class: m p (1 - p) with m p = 1/2.
    const double sd0 = std::sqrt(0.5 * (1 - pair.p0) / trials);
    const double sd1 = std::sqrt(0.5 * (1 - pair.p1) / trials);
    CHECK(std::abs(zeros_flipped / trials - 0.5) <= 3 * sd0);
    CHECK(std::abs(ones_flipped / trials - 0.5) <= 3 * sd1);
}

TEST_CASE("skip sampler matches the per-bit Bernoulli reference") {
    // Flip count histograms of both samplers against each other and against
    // the binomial law; positions must be distinct and lie in their class.
    Rng rng(9);
    const IndexedBitString x(random_uniform(40, rng));
    const ProbabilityPair pair{0.05, 0.1};
    const int trials = 100000;
    std::vector<std::uint64_t> fast(41, 0);
    std::vector<std::uint64_t> slow(41, 0);
    std::vector<std::uint64_t> per_position(40, 0);
    FlipSampler sampler;
    FlipSet flips;
    for (int i = 0; i < trials; ++i) {
        sampler.asymmetric(x, pair, rng, flips);
        ++fast[flips.size()];
        std::vector<bool> seen(40, false);
        for (auto pos : flips) {
            REQUIRE(!seen[pos]);
            seen[pos] = true;
            ++per_position[pos];
        }
        reference::bernoulli_asymmetric_flips(x.bits(), pair, rng, flips);
        ++slow[flips.size()];
    }
    for (std::size_t k = 0; k < 4; ++k) {
        const double a = static_cast<double>(fast[k]) / trials;
        const double r = static_cast<double>(slow[k]) / trials;
        CHECK(std::abs(a - r) < 0.01);
    }
    for (std::size_t i = 0; i < 40; ++i) {
        const double p = x.bits()[i] ? pair.p1 : pair.p0;
        const double f = static_cast<double>(per_position[i]) / trials;
        CHECK(std::abs(f - p) <= 4.0 * std::sqrt(p * (1 - p) / trials));
    }
}

TEST_CASE("standard skip sampler against the reference at n = 30") {
    Rng rng(10);
    const int trials = 100000;
    std::vector<std::uint64_t> per_position(30, 0);
    double fast_total = 0.0;
    double slow_total = 0.0;
    FlipSet flips;
    for (int i = 0; i < trials; ++i) {
        sample_standard_flips(30, rng, flips);
        fast_total += static_cast<double>(flips.size());
        for (auto pos : flips) ++per_position[pos];
        reference::bernoulli_standard_flips(30, rng, flips);
        slow_total += static_cast<double>(flips.size());
    }
    const double sd = std::sqrt(30.0 * (1.0 / 30) * (29.0 / 30) / trials);
    CHECK(std::abs(fast_total / trials - 1.0) <= 3 * sd);
    CHECK(std::abs(slow_total / trials - 1.0) <= 3 * sd);
    for (auto c : per_position) {
        const double f = static_cast<double>(c) / trials;
        CHECK(std::abs(f - 1.0 / 30) <= 4.0 * std::sqrt((1.0 / 30) * (29.0 / 30) / trials));
    }
}

TEST_CASE("cached and uncached skip sampling consume the stream identically") {
    Rng a(11);
    Rng b2(11);
    const IndexedBitString x(random_uniform(300, a));
    (void)random_uniform(300, b2);
    FlipSampler sampler;
    FlipSet fa;
    FlipSet fb;
    for (int i = 0; i < 20000; ++i) {
        const ProbabilityPair pair{(i % 2) ? 0.003 : 0.004, 0.002};
        sampler.asymmetric(x, pair, a, fa);
        sample_asymmetric_flips(x, pair, b2, fb);
        REQUIRE(fa == fb);
    }
}
