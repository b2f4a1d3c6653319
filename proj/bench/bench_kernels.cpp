// Parallel kernels against their serial references: batch runs, the lemma
// sweep, and skip-sampled mutation against per-bit Bernoulli mutation.

#include <benchmark/benchmark.h>

#include "asymea/ea.hpp"
#include "asymea/mutation.hpp"
#include "asymea/oracle.hpp"

using namespace asymea;

namespace {

RunConfig batch_config() {
    RunConfig c(Target::all_ones(2000));
    c.op = Operator::static_asym;
    return c;
}

void BM_BatchSerial(benchmark::State& state) {
    const auto config = batch_config();
    for (auto _ : state) benchmark::DoNotOptimize(run_batch_serial(config, 32, 7));
}
BENCHMARK(BM_BatchSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_BatchParallel(benchmark::State& state) {
    const auto config = batch_config();
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_batch(config, 32, 7, threads));
}
// Wall-clock time: CPU time only covers the calling thread.
BENCHMARK(BM_BatchParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_LemmaSweepSerial(benchmark::State& state) {
    const auto grid = oracle::LemmaGrid::standard();
    for (auto _ : state) benchmark::DoNotOptimize(oracle::lemma1_sweep_serial(grid));
}
BENCHMARK(BM_LemmaSweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_LemmaSweepParallel(benchmark::State& state) {
    const auto grid = oracle::LemmaGrid::standard();
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(oracle::lemma1_sweep(grid, threads));
}
BENCHMARK(BM_LemmaSweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_StandardFlipsSkip(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    FlipSet flips;
    for (auto _ : state) {
        sample_standard_flips(n, rng, flips);
        benchmark::DoNotOptimize(flips.data());
    }
}
BENCHMARK(BM_StandardFlipsSkip)->Arg(1000)->Arg(8000)->Arg(20000);

void BM_StandardFlipsBernoulli(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    FlipSet flips;
    for (auto _ : state) {
        reference::bernoulli_standard_flips(n, rng, flips);
        benchmark::DoNotOptimize(flips.data());
    }
}
BENCHMARK(BM_StandardFlipsBernoulli)->Arg(1000)->Arg(8000)->Arg(20000);

void BM_AsymmetricFlipsSkip(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    const IndexedBitString x(random_uniform(n, rng));
    const auto pair = static_pair(x.bits());
    FlipSet flips;
    for (auto _ : state) {
        sample_asymmetric_flips(x, pair, rng, flips);
        benchmark::DoNotOptimize(flips.data());
    }
}
BENCHMARK(BM_AsymmetricFlipsSkip)->Arg(1000)->Arg(8000)->Arg(20000);

void BM_AsymmetricFlipsBernoulli(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    const auto x = random_uniform(n, rng);
    const auto pair = static_pair(x);
    FlipSet flips;
    for (auto _ : state) {
        reference::bernoulli_asymmetric_flips(x, pair, rng, flips);
        benchmark::DoNotOptimize(flips.data());
    }
}
BENCHMARK(BM_AsymmetricFlipsBernoulli)->Arg(1000)->Arg(8000)->Arg(20000);

}  // namespace

BENCHMARK_MAIN();
