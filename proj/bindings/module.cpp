#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "sampcard/analysis.hpp"
#include "sampcard/errors.hpp"
#include "sampcard/estimators.hpp"
#include "sampcard/hash.hpp"
#include "sampcard/hll.hpp"
#include "sampcard/sampling.hpp"
#include "sampcard/simulate.hpp"

namespace py = pybind11;
using namespace sampcard;

namespace {

Algorithm parse_algorithm(const std::string& name) {
    if (name == "alg1") return Algorithm::Exact;
    if (name == "alg2") return Algorithm::Subsampled;
    if (name == "naive") return Algorithm::SketchOnly;
    throw std::invalid_argument("algorithm must be alg1, alg2 or naive");
}

EstimateReport estimate_tokens(const std::vector<std::string>& tokens, const std::string& algorithm,
                               std::uint32_t m, std::uint32_t u, std::uint64_t seed) {
    PipelineConfig config;
    config.algorithm = parse_algorithm(algorithm);
    config.sketch_registers = m;
    config.subsample_capacity = u;
    config.hash_seed = seed;
    config.reservoir_seed = derive_seed(seed, 0x7265736572766f69ULL);
    EstimatePipeline pipeline(config);
    for (const std::string& t : tokens) pipeline.offer_bytes(t.data(), t.size());
    return pipeline.finish();
}

EstimateReport estimate_values(const std::vector<std::uint64_t>& values,
                               const std::string& algorithm, std::uint32_t m, std::uint32_t u,
                               std::uint64_t seed) {
    PipelineConfig config;
    config.algorithm = parse_algorithm(algorithm);
    config.sketch_registers = m;
    config.subsample_capacity = u;
    config.hash_seed = seed;
    config.reservoir_seed = derive_seed(seed, 0x7265736572766f69ULL);
    EstimatePipeline pipeline(config);
    for (std::uint64_t v : values) pipeline.offer_value(v);
    return pipeline.finish();
}

TrialResult run_trials_py(std::uint64_t distinct, const std::string& model, double rate,
                          std::uint32_t m, std::uint32_t u, const std::string& algorithm,
                          std::uint32_t trials, std::uint64_t seed) {
    TrialConfig config;
    config.distinct = distinct;
    config.model = FrequencyModel::parse(model);
    config.rate = rate;
    config.sketch_registers = m;
    config.subsample_capacity = u;
    config.algorithm = parse_algorithm(algorithm);
    config.trials = trials;
    config.base_seed = seed;
    return run_trials(config);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "cardinality estimation for sampled streams";

    py::register_exception<EmptySampleError>(m, "EmptySampleError");
    py::register_exception<DegenerateSampleError>(m, "DegenerateSampleError");
    py::register_exception<InfeasibleBudgetError>(m, "InfeasibleBudgetError");
    py::register_exception<AllTrialsDegenerateError>(m, "AllTrialsDegenerateError");

    m.def("hash_bytes",
          [](const py::bytes& data, std::uint64_t seed) {
              const std::string s = data;
              return hash_bytes(s.data(), s.size(), seed);
          },
          py::arg("data"), py::arg("seed") = 0);
    m.def("hash_u64", &hash_u64, py::arg("value"), py::arg("seed") = 0);

    py::class_<HllSketch>(m, "HllSketch")
        .def(py::init<std::uint32_t>(), py::arg("m"))
        .def("insert", &HllSketch::insert, py::arg("hash"))
        .def("estimate", &HllSketch::estimate)
        .def_property_readonly("register_count", &HllSketch::register_count)
        .def_property_readonly("registers", [](const HllSketch& s) {
            return std::vector<int>(s.registers().begin(), s.registers().end());
        });

    py::class_<BernoulliSampler>(m, "BernoulliSampler")
        .def(py::init<double, std::uint64_t>(), py::arg("rate"), py::arg("seed") = 0)
        .def("offer", &BernoulliSampler::offer)
        .def_property_readonly("kept", &BernoulliSampler::kept)
        .def_property_readonly("offered", &BernoulliSampler::offered);

    py::class_<ReservoirSubsample>(m, "ReservoirSubsample")
        .def(py::init<std::uint32_t, std::uint64_t>(), py::arg("capacity"), py::arg("seed") = 0)
        .def("offer", &ReservoirSubsample::offer, py::arg("element_id"))
        .def("singleton_count", &ReservoirSubsample::singleton_count)
        .def("doubleton_count", &ReservoirSubsample::doubleton_count)
        .def_property_readonly("size", [](const ReservoirSubsample& r) { return r.size(); })
        .def_property_readonly("seen", &ReservoirSubsample::seen);

    py::class_<SampleSummary>(m, "SampleSummary")
        .def(py::init([](bool full_counts) {
                 return SampleSummary(full_counts ? SampleSummary::CountMode::Full
                                                  : SampleSummary::CountMode::Capped);
             }),
             py::arg("full_counts") = false)
        .def("offer", &SampleSummary::offer, py::arg("element_id"))
        .def("p0_hat", &SampleSummary::p0_hat)
        .def("gt_frequency", &SampleSummary::gt_frequency, py::arg("occurrence_count"))
        .def("p0_empirical_variance", &SampleSummary::p0_empirical_variance)
        .def_property_readonly("length", &SampleSummary::length)
        .def_property_readonly("singletons", &SampleSummary::singletons)
        .def_property_readonly("doubletons", &SampleSummary::doubletons);

    py::class_<EstimateReport>(m, "EstimateReport")
        .def_readonly("n_s_hat", &EstimateReport::n_s_hat)
        .def_readonly("p0_hat", &EstimateReport::p0_hat)
        .def_readonly("correction", &EstimateReport::correction)
        .def_readonly("n_hat", &EstimateReport::n_hat)
        .def_readonly("sample_length", &EstimateReport::sample_length)
        .def_readonly("sketch_registers", &EstimateReport::sketch_registers)
        .def_readonly("singleton_units", &EstimateReport::singleton_units)
        .def_readonly("singletons", &EstimateReport::singletons)
        .def("__repr__", [](const EstimateReport& r) {
            return "EstimateReport(n_hat=" + std::to_string(r.n_hat) +
                   ", p0_hat=" + std::to_string(r.p0_hat) + ")";
        });

    m.def("estimate_tokens", &estimate_tokens, py::arg("tokens"), py::arg("algorithm") = "alg1",
          py::arg("m") = 1024, py::arg("u") = 1024, py::arg("seed") = 0);
    m.def("estimate_values", &estimate_values, py::arg("values"), py::arg("algorithm") = "alg1",
          py::arg("m") = 1024, py::arg("u") = 1024, py::arg("seed") = 0);

    m.def("expected_p0",
          [](const std::vector<std::int64_t>& freqs, double rate, bool exact_tail) {
              return expected_p0(freqs, rate, exact_tail);
          },
          py::arg("freqs"), py::arg("rate"), py::arg("exact_tail") = false);
    m.def("expected_p1",
          [](const std::vector<std::int64_t>& freqs, double rate, bool exact_tail) {
              return expected_p1(freqs, rate, exact_tail);
          },
          py::arg("freqs"), py::arg("rate"), py::arg("exact_tail") = false);
    m.def("rel_variance_exact", &rel_variance_exact, py::arg("p0"), py::arg("p1"), py::arg("l"),
          py::arg("m"));
    m.def("rel_variance_subsampled", &rel_variance_subsampled, py::arg("p0"), py::arg("p1"),
          py::arg("u"), py::arg("m"), py::arg("are") = 1.0);

    py::class_<BudgetSplit>(m, "BudgetSplit")
        .def_readonly("budget", &BudgetSplit::budget)
        .def_readonly("m", &BudgetSplit::sketch_units)
        .def_readonly("u", &BudgetSplit::subsample_units)
        .def_readonly("predicted_rel_variance", &BudgetSplit::predicted_rel_variance)
        .def("__repr__", [](const BudgetSplit& s) {
            return "BudgetSplit(m=" + std::to_string(s.sketch_units) +
                   ", u=" + std::to_string(s.subsample_units) + ")";
        });
    m.def("optimal_split", &optimal_split, py::arg("budget"), py::arg("p0"), py::arg("p1"),
          py::arg("are") = 1.0);

    py::class_<FrequencyModel>(m, "FrequencyModel")
        .def_static("parse", &FrequencyModel::parse, py::arg("text"))
        .def("draw", &FrequencyModel::draw, py::arg("n"), py::arg("seed"))
        .def("quantile_grid", &FrequencyModel::quantile_grid, py::arg("points") = 10000)
        .def("__repr__", [](const FrequencyModel& f) { return f.to_string(); });

    py::class_<TrialResult>(m, "TrialResult")
        .def_readonly("mean_n_hat", &TrialResult::mean_n_hat)
        .def_readonly("mean_ratio", &TrialResult::mean_ratio)
        .def_readonly("bias", &TrialResult::bias)
        .def_property_readonly("rel_variance",
                               [](const TrialResult& t) -> std::optional<double> {
                                   return t.rel_variance;
                               })
        .def_readonly("degenerate_count", &TrialResult::degenerate_count)
        .def_readonly("trials", &TrialResult::trials);
    m.def("run_trials", &run_trials_py, py::arg("distinct"), py::arg("model"), py::arg("rate"),
          py::arg("m") = 1024, py::arg("u") = 100, py::arg("algorithm") = "alg1",
          py::arg("trials") = 50, py::arg("seed") = 0);

    m.attr("HYPERLOGLOG_ARE") = kHyperLogLogAre;
}
