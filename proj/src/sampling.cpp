#include "sampcard/sampling.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "sampcard/hash.hpp"

namespace sampcard {

namespace {

struct EntryBefore {
    bool operator()(const ReservoirSubsample::Entry& a, const ReservoirSubsample::Entry& b) const {
        if (a.tag != b.tag) return a.tag < b.tag;
        return a.arrival < b.arrival;
    }
};

}  // namespace

BernoulliSampler::BernoulliSampler(double rate, std::uint64_t seed) : rate_(rate), seed_(seed) {
    if (!(rate > 0.0) || rate > 1.0) {
        throw std::invalid_argument("sampling rate must be in (0, 1]");
    }
}

bool BernoulliSampler::offer() {
    const std::uint64_t word = hash_u64(offered_, seed_);
    ++offered_;
    const bool keep = rate_ >= 1.0 || to_unit(word) < rate_;
    if (keep) ++kept_;
    return keep;
}

ReservoirSubsample::ReservoirSubsample(std::uint32_t capacity, std::uint64_t seed)
    : capacity_(capacity), seed_(seed) {
    if (capacity == 0) throw std::invalid_argument("reservoir capacity must be positive");
    heap_.reserve(capacity);
}

std::uint64_t ReservoirSubsample::tag_for(std::uint64_t element_id) const {
    return hash_u64(element_id, seed_);
}

void ReservoirSubsample::offer(std::uint64_t element_id) {
    const Entry e{tag_for(element_id), element_id, seen_++};
    if (heap_.size() < capacity_) {
        heap_.push_back(e);
        std::push_heap(heap_.begin(), heap_.end(), EntryBefore{});
        return;
    }
    // replace the maximum only on strictly smaller tag; equal tags belong to
    // the same element and the first-seen position wins
    if (e.tag < heap_.front().tag) {
        std::pop_heap(heap_.begin(), heap_.end(), EntryBefore{});
        heap_.back() = e;
        std::push_heap(heap_.begin(), heap_.end(), EntryBefore{});
    }
}

std::uint64_t ReservoirSubsample::singleton_count() const {
    std::unordered_map<std::uint64_t, std::uint32_t> freq;
    freq.reserve(heap_.size());
    for (const Entry& e : heap_) ++freq[e.element_id];
    std::uint64_t n = 0;
    for (const auto& [id, c] : freq) {
        if (c == 1) ++n;
    }
    return n;
}

std::uint64_t ReservoirSubsample::doubleton_count() const {
    std::unordered_map<std::uint64_t, std::uint32_t> freq;
    freq.reserve(heap_.size());
    for (const Entry& e : heap_) ++freq[e.element_id];
    std::uint64_t n = 0;
    for (const auto& [id, c] : freq) {
        if (c == 2) ++n;
    }
    return n;
}

}  // namespace sampcard
