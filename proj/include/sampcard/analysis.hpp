#ifndef SAMPCARD_ANALYSIS_HPP
#define SAMPCARD_ANALYSIS_HPP

#include <cstdint>
#include <span>

namespace sampcard {

// Closed-form expectations and asymptotic relative-variance formulas for the
// corrected estimators, plus the storage-budget optimizer.
//
// are (asymptotic relative efficiency) scales the sketch term to (1/are)/m:
// 1.0 is the idealized n^2/m sketch of the formulas; 1/1.08 models the
// shipped HyperLogLog (variance ~1.08/m).

inline constexpr double kHyperLogLogAre = 1.0 / 1.08;

// (1/n) sum exp(-rate*f_i): expected share of distinct elements missing from
// the sample. With exact_tail, uses (1-rate)^f instead of the small-rate
// exponential limit.
double expected_p0(std::span<const std::int64_t> freqs, double rate, bool exact_tail = false);

// (rate/n) sum f_i exp(-rate*f_i): expected share appearing exactly once.
double expected_p1(std::span<const std::int64_t> freqs, double rate, bool exact_tail = false);

// (1/l)(p0(1-p0)+p1)/(1-p0)^2 + 1/m : corrected estimator with exact
// singleton tracking over a sample of length l.
double rel_variance_exact(double p0, double p1, double l, double m);

// (1/u)(2 p0(1-p0)+p1)/(1-p0)^2 + (1/are)(1/m) : corrected estimator with a
// u-slot subsample standing in for the exact tally.
double rel_variance_subsampled(double p0, double p1, double u, double m, double are = 1.0);

struct BudgetSplit {
    std::int64_t budget;
    std::int64_t sketch_units;     // m
    std::int64_t subsample_units;  // u
    double predicted_rel_variance;
};

// Splits budget B between sketch (m) and subsample (u) minimizing
// rel_variance_subsampled. With C = are*(2 p0(1-p0)+p1)/(1-p0)^2 the real
// optimum is u* = B*sqrt(C)/(1+sqrt(C)); the cheaper integer neighbor is
// returned, ties resolved toward the larger m. Throws InfeasibleBudgetError
// for B < 2.
BudgetSplit optimal_split(std::int64_t budget, double p0, double p1, double are = 1.0);

}  // namespace sampcard

#endif
