#include "sampcard/tables.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "sampcard/analysis.hpp"
#include "sampcard/hash.hpp"

namespace sampcard::tables {

namespace {

const FrequencyModel kUniform = FrequencyModel::uniform(100, 10000);
const FrequencyModel kPareto = FrequencyModel::pareto(1.1, 500.0);

struct ModelPoint {
    double p0, p1;
};

ModelPoint model_point(const FrequencyModel& model, double rate) {
    const std::vector<std::int64_t> grid = model.quantile_grid();
    return {expected_p0(grid, rate), expected_p1(grid, rate)};
}

Row simulate_row(std::string_view estimator, Algorithm algo, const FrequencyModel& model,
                 double rate, std::int64_t m, std::int64_t u, const RunOptions& opt,
                 std::uint64_t row_salt) {
    Row row;
    row.estimator = std::string(estimator);
    row.rate = rate;
    row.m = m;
    row.u = u;
    row.m_run = HllSketch::nearest_supported_register_count(static_cast<std::uint32_t>(m));
    row.expected_sample_length = rate >= 1.0
        ? 0.0
        : rate * static_cast<double>(opt.distinct) * model.mean();

    TrialConfig tc;
    tc.distinct = opt.distinct;
    tc.model = model;
    tc.rate = rate;
    tc.sketch_registers = row.m_run;
    tc.subsample_capacity = u > 0 ? static_cast<std::uint32_t>(u) : 1;
    tc.algorithm = algo;
    tc.trials = opt.trials;
    tc.base_seed = derive_seed(opt.seed, row_salt);

    const TrialResult tr = run_trials(tc);
    row.trials = tr.trials;
    row.degenerate = tr.degenerate_count;
    row.mean_ratio = tr.mean_ratio;
    row.bias = tr.bias;
    row.sim_variance = tr.rel_variance;
    return row;
}

Report run_intro(const RunOptions& opt) {
    Report report{Preset::Intro, opt, {}};
    const double rate = 1.0 / 1000.0;
    const ModelPoint mp = model_point(kUniform, rate);
    const double l = rate * static_cast<double>(opt.distinct) * kUniform.mean();

    Row naive = simulate_row("naive", Algorithm::SketchOnly, kUniform, rate, 200, 0, opt, 1);
    report.rows.push_back(naive);

    Row corrected = simulate_row("alg1", Algorithm::Exact, kUniform, rate, 200, 0, opt, 2);
    corrected.analysis_variance = rel_variance_exact(mp.p0, mp.p1, l, 200.0);
    report.rows.push_back(corrected);
    return report;
}

Report run_table1(Preset preset, const RunOptions& opt) {
    Report report{preset, opt, {}};
    const double rate = preset == Preset::T1a ? 1.0 / 100.0 : 1.0 / 1000.0;
    const ModelPoint mp = model_point(kUniform, rate);
    const double l = rate * static_cast<double>(opt.distinct) * kUniform.mean();
    std::uint64_t salt = 0;
    for (std::int64_t m : {50, 100, 150}) {
        Row row = simulate_row("alg1", Algorithm::Exact, kUniform, rate, m, 0, opt, ++salt);
        row.analysis_variance = rel_variance_exact(mp.p0, mp.p1, l, static_cast<double>(m));
        report.rows.push_back(row);
    }
    return report;
}

Report run_table2(Preset preset, const RunOptions& opt) {
    Report report{preset, opt, {}};
    const double rate = preset == Preset::T2a ? 1.0 / 100.0 : 1.0 / 1000.0;
    const ModelPoint mp = model_point(kUniform, rate);
    std::uint64_t salt = 10;
    for (const auto& [m, u] : {std::pair<std::int64_t, std::int64_t>{10, 190},
                              {50, 150}, {100, 100}, {150, 50}, {190, 10}}) {
        Row row = simulate_row("alg2", Algorithm::Subsampled, kUniform, rate, m, u, opt, ++salt);
        row.analysis_variance = rel_variance_subsampled(mp.p0, mp.p1, static_cast<double>(u),
                                                        static_cast<double>(m));
        report.rows.push_back(row);
    }
    return report;
}

Report run_table3(const RunOptions& opt) {
    Report report{Preset::T3, opt, {}};
    const double rate = 1.0 / 100.0;
    const ModelPoint mp = model_point(kPareto, rate);
    std::uint64_t salt = 20;
    for (const auto& [m, u] : {std::pair<std::int64_t, std::int64_t>{50, 1950},
                              {100, 1900}, {500, 1500}, {1000, 1000}, {1500, 500}}) {
        Row row = simulate_row("alg2", Algorithm::Subsampled, kPareto, rate, m, u, opt, ++salt);
        row.analysis_variance = rel_variance_subsampled(mp.p0, mp.p1, static_cast<double>(u),
                                                        static_cast<double>(m));
        report.rows.push_back(row);
    }
    return report;
}

Report run_table4a(const RunOptions& opt) {
    Report report{Preset::T4a, opt, {}};
    std::uint64_t salt = 30;
    for (double rate : {1.0 / 100.0, 1.0 / 500.0, 1.0 / 1000.0}) {
        const ModelPoint mp = model_point(kUniform, rate);
        const double l = rate * static_cast<double>(opt.distinct) * kUniform.mean();
        for (std::int64_t m : {100, 500, 1000}) {
            Row row = simulate_row("alg1", Algorithm::Exact, kUniform, rate, m, 0, opt, ++salt);
            row.analysis_variance = rel_variance_exact(mp.p0, mp.p1, l, static_cast<double>(m));
            report.rows.push_back(row);
        }
    }
    for (std::int64_t m : {100, 500, 1000}) {
        Row row = simulate_row("naive", Algorithm::SketchOnly, kUniform, 1.0, m, 0, opt, ++salt);
        report.rows.push_back(row);
    }
    return report;
}

Report run_table4b(const RunOptions& opt) {
    Report report{Preset::T4b, opt, {}};
    std::uint64_t salt = 50;
    for (double rate : {1.0 / 100.0, 1.0 / 500.0, 1.0 / 1000.0}) {
        const ModelPoint mp = model_point(kUniform, rate);
        for (std::int64_t budget : {100, 500, 1000}) {
            const BudgetSplit split = optimal_split(budget, mp.p0, mp.p1);
            Row row = simulate_row("alg2", Algorithm::Subsampled, kUniform, rate,
                                   split.sketch_units, split.subsample_units, opt, ++salt);
            row.budget = budget;
            row.analysis_variance = split.predicted_rel_variance;
            report.rows.push_back(row);
        }
    }
    for (std::int64_t budget : {100, 500, 1000}) {
        Row row = simulate_row("naive", Algorithm::SketchOnly, kUniform, 1.0, budget, 0, opt, ++salt);
        row.budget = budget;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace

std::optional<Preset> parse_preset(std::string_view name) {
    if (name == "intro") return Preset::Intro;
    if (name == "1a") return Preset::T1a;
    if (name == "1b") return Preset::T1b;
    if (name == "2a") return Preset::T2a;
    if (name == "2b") return Preset::T2b;
    if (name == "3") return Preset::T3;
    if (name == "4a") return Preset::T4a;
    if (name == "4b") return Preset::T4b;
    return std::nullopt;
}

std::string preset_name(Preset preset) {
    switch (preset) {
        case Preset::Intro: return "intro";
        case Preset::T1a: return "1a";
        case Preset::T1b: return "1b";
        case Preset::T2a: return "2a";
        case Preset::T2b: return "2b";
        case Preset::T3: return "3";
        case Preset::T4a: return "4a";
        case Preset::T4b: return "4b";
    }
    return "?";
}

std::vector<Preset> all_presets() {
    return {Preset::Intro, Preset::T1a, Preset::T1b, Preset::T2a,
            Preset::T2b, Preset::T3, Preset::T4a, Preset::T4b};
}

Report run_preset(Preset preset, const RunOptions& options) {
    RunOptions opt = options;
    if (opt.fast) opt.distinct = 1000;
    switch (preset) {
        case Preset::Intro: return run_intro(opt);
        case Preset::T1a: return run_table1(Preset::T1a, opt);
        case Preset::T1b: return run_table1(Preset::T1b, opt);
        case Preset::T2a: return run_table2(Preset::T2a, opt);
        case Preset::T2b: return run_table2(Preset::T2b, opt);
        case Preset::T3: return run_table3(opt);
        case Preset::T4a: return run_table4a(opt);
        case Preset::T4b: return run_table4b(opt);
    }
    throw std::logic_error("unknown preset");
}

std::string csv_header() {
    return "table,estimator,rate,budget,m,u,m_run,trials,degenerate,"
           "expected_l,mean_ratio,bias,analysis_variance,sim_variance";
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

std::string to_csv_row(const Report& report, const Row& row) {
    std::string out;
    out += preset_name(report.preset);
    out += ',' + row.estimator;
    out += ',' + format_double(row.rate);
    out += ',' + (row.budget > 0 ? std::to_string(row.budget) : std::string());
    out += ',' + std::to_string(row.m);
    out += ',' + (row.u > 0 ? std::to_string(row.u) : std::string());
    out += ',' + std::to_string(row.m_run);
    out += ',' + std::to_string(row.trials);
    out += ',' + std::to_string(row.degenerate);
    out += ',' + (row.expected_sample_length > 0 ? format_double(row.expected_sample_length)
                                                 : std::string());
    out += ',' + format_double(row.mean_ratio);
    out += ',' + format_double(row.bias);
    out += ',' + (row.analysis_variance ? format_double(*row.analysis_variance) : std::string());
    out += ',' + (row.sim_variance ? format_double(*row.sim_variance) : std::string());
    return out;
}

std::string to_csv(const Report& report) {
    std::string out = csv_header() + '\n';
    for (const Row& row : report.rows) {
        out += to_csv_row(report, row);
        out += '\n';
    }
    return out;
}

}  // namespace sampcard::tables
