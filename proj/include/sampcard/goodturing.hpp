#ifndef SAMPCARD_GOODTURING_HPP
#define SAMPCARD_GOODTURING_HPP

#include <cstdint>
#include <unordered_map>

namespace sampcard {

// Exact Good-Turing tallies over a stream of element ids: sample length l,
// singleton count |E1| and doubleton count |E2|. Per-element counts are
// capped at 3 ("once / twice / more"), which is all the estimators need; an
// uncapped mode keeps full multiplicities for higher-order frequencies and
// oracle tests.
class SampleSummary {
public:
    enum class CountMode { Capped, Full };

    explicit SampleSummary(CountMode mode = CountMode::Capped) : mode_(mode) {}

    void offer(std::uint64_t element_id);

    std::uint64_t length() const { return length_; }
    std::uint64_t singletons() const { return singletons_; }
    std::uint64_t doubletons() const { return doubletons_; }
    std::uint64_t distinct() const { return counts_.size(); }

    // |E1|/l, the Good-Turing estimate of the unseen probability mass.
    // Throws EmptySampleError when no element has been offered.
    double p0_hat() const;

    // (i+1)|E_{i+1}|/l. i >= 2 requires CountMode::Full.
    double gt_frequency(unsigned occurrence_count) const;

    // (1/l)((|E1|+2|E2|)/l - (|E1|/l)^2), the sampling variance of p0_hat.
    double p0_empirical_variance() const;

    // Number of ids occurring exactly `occurrence_count` times; Full mode only.
    std::uint64_t class_size(std::uint64_t occurrence_count) const;

    CountMode mode() const { return mode_; }

private:
    CountMode mode_;
    std::uint64_t length_ = 0;
    std::uint64_t singletons_ = 0;
    std::uint64_t doubletons_ = 0;
    std::unordered_map<std::uint64_t, std::uint64_t> counts_;
};

}  // namespace sampcard

#endif
