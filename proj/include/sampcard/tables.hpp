#ifndef SAMPCARD_TABLES_HPP
#define SAMPCARD_TABLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sampcard/simulate.hpp"

namespace sampcard::tables {

// Built-in experiment grids. "intro" is the motivating uniform/P=1/1000
// comparison of the naive and corrected estimators; 1a/1b are the corrected
// exact-tally estimator over uniform frequencies at P=1/100 and P=1/1000;
// 2a/2b the subsampled variant with m+u=200; 3 the subsampled variant over
// Pareto frequencies with m+u=2000; 4a the exact variant across rates; 4b
// optimizer splits of budgets 100/500/1000.
enum class Preset { Intro, T1a, T1b, T2a, T2b, T3, T4a, T4b };

std::optional<Preset> parse_preset(std::string_view name);
std::string preset_name(Preset preset);
std::vector<Preset> all_presets();

struct RunOptions {
    std::uint32_t trials = 200;
    std::uint64_t seed = 0;
    std::uint64_t distinct = 10000;  // n
    bool fast = false;               // n=1000 scale
};

struct Row {
    std::string estimator;           // alg1 | alg2 | naive
    double rate = 1.0;               // P
    std::int64_t budget = 0;         // 4b only
    std::int64_t m = 0;              // nominal sketch units
    std::int64_t u = 0;              // nominal subsample units (0 = none)
    std::uint32_t m_run = 0;         // power of two actually used
    std::uint32_t trials = 0;
    std::uint32_t degenerate = 0;
    double expected_sample_length = 0.0;  // rate * n * mean frequency
    double mean_ratio = 0.0;
    double bias = 0.0;
    std::optional<double> analysis_variance;  // formula value at nominal m,u
    std::optional<double> sim_variance;
};

struct Report {
    Preset preset;
    RunOptions options;
    std::vector<Row> rows;
};

Report run_preset(Preset preset, const RunOptions& options);

std::string csv_header();
std::string to_csv_row(const Report& report, const Row& row);
std::string to_csv(const Report& report);

}  // namespace sampcard::tables

#endif
