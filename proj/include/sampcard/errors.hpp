#ifndef SAMPCARD_ERRORS_HPP
#define SAMPCARD_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sampcard {

// Estimation was asked for before any element was offered.
class EmptySampleError : public std::runtime_error {
public:
    EmptySampleError() : std::runtime_error("empty sample: no elements offered") {}
};

// Every observed element was a singleton, so the unseen-mass correction
// 1/(1-p0) is unbounded. Carries the run state for diagnostics.
class DegenerateSampleError : public std::runtime_error {
public:
    DegenerateSampleError(std::uint64_t sample_length, std::uint64_t singletons,
                          double sketch_estimate)
        : std::runtime_error("degenerate sample: every element is a singleton (p0_hat == 1)"),
          sample_length(sample_length),
          singletons(singletons),
          sketch_estimate(sketch_estimate) {}

    std::uint64_t sample_length;
    std::uint64_t singletons;
    double sketch_estimate;
};

// Storage budget too small to split between sketch and subsample.
class InfeasibleBudgetError : public std::runtime_error {
public:
    explicit InfeasibleBudgetError(long long budget)
        : std::runtime_error("infeasible budget: " + std::to_string(budget) +
                             " units cannot be split (need at least 2)") {}
};

// Every Monte-Carlo trial ended with a degenerate sample.
class AllTrialsDegenerateError : public std::runtime_error {
public:
    AllTrialsDegenerateError() : std::runtime_error("all trials degenerate: no estimate produced") {}
};

}  // namespace sampcard

#endif
