// Micro-benchmark: elements/second through the estimation pipelines, fed
// in-memory 64-bit records (the binary-u64 ingestion path minus file IO).

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "sampcard/estimators.hpp"
#include "sampcard/hash.hpp"

namespace {

double run_case(const char* name, sampcard::Algorithm algo, std::uint64_t count,
                std::uint64_t distinct) {
    sampcard::PipelineConfig config;
    config.algorithm = algo;
    config.sketch_registers = 1024;
    config.subsample_capacity = 1024;
    sampcard::EstimatePipeline pipeline(config);

    const auto start = std::chrono::steady_clock::now();
    for (std::uint64_t i = 0; i < count; ++i) {
        pipeline.offer_value(i % distinct);
    }
    const auto stop = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(stop - start).count();
    const double rate = static_cast<double>(count) / secs;
    std::printf("%-10s %12" PRIu64 " elements  %8.3f s  %10.3e elements/s  (n_s_hat %.0f)\n",
                name, count, secs, rate, pipeline.finish().n_s_hat);
    return rate;
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t count = 50'000'000;
    if (argc > 1) count = std::strtoull(argv[1], nullptr, 10);
    const std::uint64_t distinct = 1'000'000;

    run_case("naive", sampcard::Algorithm::SketchOnly, count, distinct);
    run_case("alg2", sampcard::Algorithm::Subsampled, count, distinct);
    run_case("alg1", sampcard::Algorithm::Exact, count / 5, distinct);
    return 0;
}
