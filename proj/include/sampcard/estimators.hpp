#ifndef SAMPCARD_ESTIMATORS_HPP
#define SAMPCARD_ESTIMATORS_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "sampcard/goodturing.hpp"
#include "sampcard/hll.hpp"
#include "sampcard/sampling.hpp"

namespace sampcard {

enum class Algorithm { Exact, Subsampled, SketchOnly };

struct PipelineConfig {
    std::uint32_t sketch_registers = 1024;  // m
    std::uint32_t subsample_capacity = 1024;  // u, Subsampled only
    std::uint64_t hash_seed = 0;
    std::uint64_t reservoir_seed = 1;
    Algorithm algorithm = Algorithm::Exact;

    // Floor for a meaningful singleton fraction in subsampled mode.
    static constexpr std::uint32_t kMinSubsample = 10;

    // Throws std::invalid_argument on unusable settings (front-end contract;
    // the simulation harness may construct pipelines with smaller u directly).
    void validate() const;
};

struct EstimateReport {
    double n_s_hat = 0.0;    // sketch estimate over the sample
    double p0_hat = 0.0;     // estimated unseen share
    double correction = 1.0; // 1/(1-p0_hat)
    double n_hat = 0.0;      // corrected cardinality
    std::uint64_t sample_length = 0;            // l
    std::uint32_t sketch_registers = 0;         // m
    std::uint64_t singleton_units = 0;          // l (exact) or min(u, l) (subsampled)
    std::uint64_t singletons = 0;               // |E1| or |U1|
    std::optional<double> predicted_rel_variance;
};

// Single-pass pipeline: every element hash goes to the sketch and to the
// singleton tracker (exact tallies, a u-slot reservoir, or nothing).
// finish() throws EmptySampleError on an empty stream and
// DegenerateSampleError when every tracked element is a singleton.
class EstimatePipeline {
public:
    explicit EstimatePipeline(const PipelineConfig& config);

    void offer_hash(std::uint64_t element_hash);
    void offer_bytes(const void* data, std::size_t len);
    void offer_value(std::uint64_t value);

    EstimateReport finish() const;

    std::uint64_t length() const { return length_; }
    const PipelineConfig& config() const { return config_; }

    // Good-Turing plug-in for the next frequency class (2|E2|/l or 2|U2|/u');
    // feeds variance prediction.
    double p1_plugin() const;

private:
    PipelineConfig config_;
    HllSketch sketch_;
    SampleSummary summary_;           // Exact mode
    ReservoirSubsample reservoir_;    // Subsampled mode
    std::uint64_t length_ = 0;
};

// Whole-stream wrappers over spans of 64-bit element values.
EstimateReport algorithm1(std::span<const std::uint64_t> values, std::uint32_t m,
                          std::uint64_t hash_seed = 0);
EstimateReport algorithm2(std::span<const std::uint64_t> values, std::uint32_t m, std::uint32_t u,
                          std::uint64_t hash_seed = 0, std::uint64_t reservoir_seed = 1);
double naive_estimate(std::span<const std::uint64_t> values, std::uint32_t m,
                      std::uint64_t hash_seed = 0);

}  // namespace sampcard

#endif
