#ifndef SAMPCARD_SAMPLING_HPP
#define SAMPCARD_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sampcard {

// Keeps each offered stream position independently with probability `rate`.
// Counter-based (hash of the position index under the seed), so a fixed seed
// reproduces the exact keep/drop sequence.
class BernoulliSampler {
public:
    BernoulliSampler(double rate, std::uint64_t seed);

    // True iff this position is kept; increments the kept count when so.
    bool offer();

    double rate() const { return rate_; }
    std::uint64_t offered() const { return offered_; }
    std::uint64_t kept() const { return kept_; }

private:
    double rate_;
    std::uint64_t seed_;
    std::uint64_t offered_ = 0;
    std::uint64_t kept_ = 0;
};

// One-pass uniform subsample of a stream of element ids, kept as the
// bottom-`capacity` positions ordered by element-hash tag. All occurrences of
// an element share one tag (the hash of its id under the reservoir seed), so
// the retained set is a uniform subset of *distinct* elements filled to
// `capacity` position slots; within-reservoir singletons then estimate the
// stream's singleton share |E1|/l. Ties keep the first-seen position.
class ReservoirSubsample {
public:
    struct Entry {
        std::uint64_t tag;
        std::uint64_t element_id;
        std::uint64_t arrival;  // 0-based offer index, for exact tie-breaking
    };

    ReservoirSubsample(std::uint32_t capacity, std::uint64_t seed);

    void offer(std::uint64_t element_id);

    std::uint32_t capacity() const { return capacity_; }
    std::uint64_t seen() const { return seen_; }
    std::size_t size() const { return heap_.size(); }
    const std::vector<Entry>& entries() const { return heap_; }

    // Ids occurring exactly once among the retained positions (|U1|).
    std::uint64_t singleton_count() const;
    // Ids occurring exactly twice (|U2|); feeds the variance prediction.
    std::uint64_t doubleton_count() const;

    std::uint64_t tag_for(std::uint64_t element_id) const;

private:
    std::uint32_t capacity_;
    std::uint64_t seed_;
    std::uint64_t seen_ = 0;
    std::vector<Entry> heap_;  // max-heap by (tag, arrival)
};

}  // namespace sampcard

#endif
