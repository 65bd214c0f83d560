#include "sampcard/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "sampcard/errors.hpp"
#include "sampcard/hash.hpp"

namespace sampcard {

std::vector<std::uint32_t> synthesize_sampled_stream(std::span<const std::int64_t> freqs,
                                                     double rate, std::uint64_t seed,
                                                     bool shuffle) {
    if (!(rate > 0.0) || !(rate < 1.0)) {
        throw std::invalid_argument("sampling rate must be in (0, 1)");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> stream;
    stream.reserve(static_cast<std::size_t>(rate * 1.1 * static_cast<double>(freqs.size()) *
                                            std::max(1.0, static_cast<double>(freqs[0]))));
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        if (freqs[i] < 1) throw std::invalid_argument("frequencies must be positive");
        std::binomial_distribution<std::int64_t> thin(freqs[i], rate);
        const std::int64_t k = thin(rng);
        stream.insert(stream.end(), static_cast<std::size_t>(k), static_cast<std::uint32_t>(i));
    }
    if (shuffle) std::shuffle(stream.begin(), stream.end(), rng);
    return stream;
}

namespace {

struct TrialSeeds {
    std::uint64_t freq, stream, hash, reservoir;
};

TrialSeeds seeds_for(std::uint64_t base, std::uint32_t trial) {
    const std::uint64_t t = derive_seed(base, trial);
    return {derive_seed(t, 1), derive_seed(t, 2), derive_seed(t, 3), derive_seed(t, 4)};
}

}  // namespace

TrialResult run_trials(const TrialConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("trial count must be >= 1");
    if (config.distinct < 1) throw std::invalid_argument("distinct count must be >= 1");
    const bool full_rate = config.rate >= 1.0;
    if (full_rate && config.algorithm != Algorithm::SketchOnly) {
        throw std::invalid_argument("rate 1.0 is only supported for the sketch-only estimator");
    }

    TrialResult result;
    result.trials = config.trials;
    std::vector<double> ratios;
    ratios.reserve(config.trials);

    for (std::uint32_t t = 0; t < config.trials; ++t) {
        const TrialSeeds seeds = seeds_for(config.base_seed, t);

        PipelineConfig pc;
        pc.algorithm = config.algorithm;
        pc.sketch_registers = config.sketch_registers;
        pc.subsample_capacity = std::max<std::uint32_t>(1, config.subsample_capacity);
        pc.hash_seed = seeds.hash;
        pc.reservoir_seed = seeds.reservoir;
        EstimatePipeline pipeline(pc);

        if (full_rate) {
            // duplicates never change the sketch, so the full stream reduces
            // to one occurrence per distinct element
            for (std::uint64_t i = 0; i < config.distinct; ++i) pipeline.offer_value(i);
        } else {
            const std::vector<std::int64_t> freqs = config.model.draw(config.distinct, seeds.freq);
            const std::vector<std::uint32_t> stream =
                synthesize_sampled_stream(freqs, config.rate, seeds.stream, config.shuffle);
            for (std::uint32_t idx : stream) pipeline.offer_value(idx);
        }

        try {
            const EstimateReport report = pipeline.finish();
            const double ratio = report.n_hat / static_cast<double>(config.distinct);
            ratios.push_back(ratio);
            if (config.keep_per_trial) result.per_trial.push_back(report.n_hat);
        } catch (const DegenerateSampleError&) {
            ++result.degenerate_count;
        } catch (const EmptySampleError&) {
            ++result.degenerate_count;
        }
    }

    if (ratios.empty()) throw AllTrialsDegenerateError();

    double sum = 0.0;
    for (double r : ratios) sum += r;
    result.mean_ratio = sum / static_cast<double>(ratios.size());
    result.mean_n_hat = result.mean_ratio * static_cast<double>(config.distinct);
    result.bias = std::abs(result.mean_ratio - 1.0);
    if (ratios.size() >= 2) {
        double ss = 0.0;
        for (double r : ratios) ss += (r - result.mean_ratio) * (r - result.mean_ratio);
        result.rel_variance = ss / static_cast<double>(ratios.size() - 1);
    }
    return result;
}

}  // namespace sampcard
