#ifndef SAMPCARD_SIMULATE_HPP
#define SAMPCARD_SIMULATE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sampcard/estimators.hpp"
#include "sampcard/freq_model.hpp"

namespace sampcard {

// Sampled stream synthesized directly: element i contributes
// Binomial(f_i, rate) occurrences (distributionally identical to thinning a
// materialized stream), positions shuffled by default. Entries are element
// indexes into the frequency list.
std::vector<std::uint32_t> synthesize_sampled_stream(std::span<const std::int64_t> freqs,
                                                     double rate, std::uint64_t seed,
                                                     bool shuffle = true);

struct TrialConfig {
    std::uint64_t distinct = 10000;  // n
    FrequencyModel model;
    double rate = 0.01;              // P; 1.0 allowed for SketchOnly only
    std::uint32_t sketch_registers = 1024;
    std::uint32_t subsample_capacity = 100;
    Algorithm algorithm = Algorithm::Exact;
    std::uint32_t trials = 200;      // R
    std::uint64_t base_seed = 0;
    bool shuffle = true;
    bool keep_per_trial = false;
};

struct TrialResult {
    double mean_n_hat = 0.0;
    double mean_ratio = 0.0;                  // mean(n_hat)/n
    double bias = 0.0;                        // |mean_ratio - 1|
    std::optional<double> rel_variance;       // sample variance of n_hat/n; absent for <2 successes
    std::uint32_t degenerate_count = 0;
    std::uint32_t trials = 0;
    std::vector<double> per_trial;            // n_hat values, when requested
};

// R independent trials, seeds derived from base_seed+t: fresh frequencies,
// fresh sampling, fresh hash seeds. Deterministic given the config. Throws
// AllTrialsDegenerateError when no trial produced an estimate.
TrialResult run_trials(const TrialConfig& config);

}  // namespace sampcard

#endif
