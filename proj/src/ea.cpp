#include "asymea/ea.hpp"

#include <cassert>
#include <exception>
#include <stdexcept>

namespace asymea {

void RunConfig::validate() const {
    if (evaluation_cap() == 0) throw std::invalid_argument("max_evaluations must be positive");
    if (initial && initial->size() != n())
        throw std::invalid_argument("initial point length does not match the target");
    if (op == Operator::self_adjusting_asym) StrengthController(alpha, phase_length);
}

RunRecord run(const RunConfig& config) {
    config.validate();
    const std::size_t n = config.n();
    const BitString& a = config.target.bits();

    Rng rng(config.seed);
    IndexedBitString x(config.initial ? *config.initial : random_uniform(n, rng));

    RunRecord record;
    record.seed = config.seed;
    std::size_t fitness = eval(x.bits(), config.target);
    if (fitness == n) {
        record.evaluations = 0;
        record.final_fitness = fitness;
        return record;
    }

    std::optional<StrengthController> controller;
    if (config.op == Operator::self_adjusting_asym)
        controller.emplace(config.alpha, config.phase_length);

    FlipSampler sampler;
    FlipSet flips;
    flips.reserve(64);
    const std::uint64_t cap = config.evaluation_cap();

    for (std::uint64_t t = 1; t <= cap; ++t) {
        switch (config.op) {
            case Operator::standard:
                sampler.standard(n, rng, flips);
                break;
            case Operator::static_asym:
                sampler.asymmetric(x, static_pair(x.count_zeros(), x.count_ones()), rng, flips);
                break;
            case Operator::self_adjusting_asym:
                sampler.asymmetric(x, controller->current_pair(x.count_zeros(), x.count_ones()),
                                   rng, flips);
                break;
        }

        // f(y) - f(x): flipping a mismatched bit gains one, a matched bit loses one.
        std::int64_t delta = 0;
        for (auto i : flips) delta += (x.bits()[i] != a[i]) ? 1 : -1;

        if (delta >= 0) {
            for (auto i : flips) x.flip(i);
            fitness = static_cast<std::size_t>(static_cast<std::int64_t>(fitness) + delta);
            assert(fitness == eval(x.bits(), config.target));
        }
        if (delta > 0) ++record.improvements;

        if (fitness == n) {
            record.evaluations = t;
            break;
        }

        if (controller) {
            controller->record_outcome(delta > 0);
            if (controller->at_phase_boundary()) {
                auto phase = controller->phase_boundary_update(rng);
                if (config.trace) record.strength_trace.push_back(phase);
            }
        }
    }

    record.final_fitness = fitness;
    return record;
}

std::vector<RunRecord> run_batch(const RunConfig& config, std::uint64_t runs,
                                 std::uint64_t master_seed, int parallelism) {
    if (runs == 0) throw std::invalid_argument("runs must be positive");
    if (parallelism < 1) throw std::invalid_argument("parallelism must be positive");
    config.validate();

    std::vector<RunRecord> records(runs);
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(runs);

#pragma omp parallel for schedule(dynamic) num_threads(parallelism)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            RunConfig local = config;
            local.seed = derive_seed(master_seed, static_cast<std::uint64_t>(i));
            records[static_cast<std::size_t>(i)] = run(local);
        } catch (...) {
#pragma omp critical(asymea_batch_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

std::vector<RunRecord> run_batch_serial(const RunConfig& config, std::uint64_t runs,
                                        std::uint64_t master_seed) {
    if (runs == 0) throw std::invalid_argument("runs must be positive");
    std::vector<RunRecord> records;
    records.reserve(runs);
    RunConfig local = config;
    for (std::uint64_t i = 0; i < runs; ++i) {
        local.seed = derive_seed(master_seed, i);
        records.push_back(run(local));
    }
    return records;
}

std::optional<double> fraction_at_max_strength(const RunRecord& record, double alpha,
                                               std::uint64_t after_phase) {
    const double top = StrengthController(alpha, 2).max_strength();
    std::uint64_t total = 0;
    std::uint64_t at_top = 0;
    for (const auto& p : record.strength_trace) {
        if (p.phase <= after_phase) continue;
        ++total;
        if (p.r0 == top) ++at_top;
    }
    if (total == 0) return std::nullopt;
    return static_cast<double>(at_top) / static_cast<double>(total);
}

}  // namespace asymea
