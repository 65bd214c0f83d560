#include "sampcard/estimators.hpp"

#include <algorithm>
#include <stdexcept>

#include "sampcard/errors.hpp"
#include "sampcard/hash.hpp"

namespace sampcard {

void PipelineConfig::validate() const {
    if (algorithm == Algorithm::Subsampled && subsample_capacity < kMinSubsample) {
        throw std::invalid_argument("subsample capacity below " + std::to_string(kMinSubsample) +
                                    " gives a meaningless singleton fraction");
    }
    HllSketch probe(sketch_registers);  // rejects bad m
    (void)probe;
}

EstimatePipeline::EstimatePipeline(const PipelineConfig& config)
    : config_(config),
      sketch_(config.sketch_registers),
      summary_(SampleSummary::CountMode::Capped),
      reservoir_(std::max<std::uint32_t>(1, config.subsample_capacity), config.reservoir_seed) {}

void EstimatePipeline::offer_hash(std::uint64_t element_hash) {
    ++length_;
    sketch_.insert(element_hash);
    switch (config_.algorithm) {
        case Algorithm::Exact: summary_.offer(element_hash); break;
        case Algorithm::Subsampled: reservoir_.offer(element_hash); break;
        case Algorithm::SketchOnly: break;
    }
}

void EstimatePipeline::offer_bytes(const void* data, std::size_t len) {
    offer_hash(hash_bytes(data, len, config_.hash_seed));
}

void EstimatePipeline::offer_value(std::uint64_t value) {
    offer_hash(hash_u64(value, config_.hash_seed));
}

double EstimatePipeline::p1_plugin() const {
    if (length_ == 0) throw EmptySampleError();
    switch (config_.algorithm) {
        case Algorithm::Exact:
            return summary_.gt_frequency(1);
        case Algorithm::Subsampled: {
            const double units = static_cast<double>(std::min<std::uint64_t>(
                config_.subsample_capacity, length_));
            return 2.0 * static_cast<double>(reservoir_.doubleton_count()) / units;
        }
        case Algorithm::SketchOnly: return 0.0;
    }
    return 0.0;
}

EstimateReport EstimatePipeline::finish() const {
    if (length_ == 0) throw EmptySampleError();

    EstimateReport report;
    report.sample_length = length_;
    report.sketch_registers = config_.sketch_registers;
    report.n_s_hat = sketch_.estimate();

    switch (config_.algorithm) {
        case Algorithm::Exact:
            report.singleton_units = length_;
            report.singletons = summary_.singletons();
            break;
        case Algorithm::Subsampled:
            report.singleton_units = std::min<std::uint64_t>(config_.subsample_capacity, length_);
            report.singletons = reservoir_.singleton_count();
            break;
        case Algorithm::SketchOnly:
            report.singleton_units = 0;
            report.singletons = 0;
            break;
    }

    if (config_.algorithm == Algorithm::SketchOnly) {
        report.p0_hat = 0.0;
    } else {
        report.p0_hat = static_cast<double>(report.singletons) /
                        static_cast<double>(report.singleton_units);
    }
    if (report.p0_hat >= 1.0) {
        throw DegenerateSampleError(length_, report.singletons, report.n_s_hat);
    }
    report.correction = 1.0 / (1.0 - report.p0_hat);
    report.n_hat = report.n_s_hat * report.correction;
    return report;
}

namespace {

EstimateReport run_span(std::span<const std::uint64_t> values, const PipelineConfig& config) {
    EstimatePipeline pipeline(config);
    for (std::uint64_t v : values) pipeline.offer_value(v);
    return pipeline.finish();
}

}  // namespace

EstimateReport algorithm1(std::span<const std::uint64_t> values, std::uint32_t m,
                          std::uint64_t hash_seed) {
    PipelineConfig config;
    config.algorithm = Algorithm::Exact;
    config.sketch_registers = m;
    config.hash_seed = hash_seed;
    return run_span(values, config);
}

EstimateReport algorithm2(std::span<const std::uint64_t> values, std::uint32_t m, std::uint32_t u,
                          std::uint64_t hash_seed, std::uint64_t reservoir_seed) {
    PipelineConfig config;
    config.algorithm = Algorithm::Subsampled;
    config.sketch_registers = m;
    config.subsample_capacity = u;
    config.hash_seed = hash_seed;
    config.reservoir_seed = reservoir_seed;
    return run_span(values, config);
}

double naive_estimate(std::span<const std::uint64_t> values, std::uint32_t m,
                      std::uint64_t hash_seed) {
    PipelineConfig config;
    config.algorithm = Algorithm::SketchOnly;
    config.sketch_registers = m;
    config.hash_seed = hash_seed;
    return run_span(values, config).n_hat;
}

}  // namespace sampcard
