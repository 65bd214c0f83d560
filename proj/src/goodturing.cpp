#include "sampcard/goodturing.hpp"

#include <stdexcept>

#include "sampcard/errors.hpp"

namespace sampcard {

void SampleSummary::offer(std::uint64_t element_id) {
    ++length_;
    auto [it, inserted] = counts_.try_emplace(element_id, 0);
    std::uint64_t& c = it->second;
    if (mode_ == CountMode::Full) {
        ++c;
        if (c == 1) ++singletons_;
        else if (c == 2) { --singletons_; ++doubletons_; }
        else if (c == 3) --doubletons_;
        return;
    }
    switch (c) {
        case 0: c = 1; ++singletons_; break;
        case 1: c = 2; --singletons_; ++doubletons_; break;
        case 2: c = 3; --doubletons_; break;
        default: break;  // capped at 3
    }
}

double SampleSummary::p0_hat() const {
    if (length_ == 0) throw EmptySampleError();
    return static_cast<double>(singletons_) / static_cast<double>(length_);
}

double SampleSummary::gt_frequency(unsigned occurrence_count) const {
    if (length_ == 0) throw EmptySampleError();
    const double l = static_cast<double>(length_);
    if (occurrence_count == 0) return static_cast<double>(singletons_) / l;
    if (occurrence_count == 1) return 2.0 * static_cast<double>(doubletons_) / l;
    if (mode_ != CountMode::Full) {
        throw std::logic_error("gt_frequency for i >= 2 needs CountMode::Full tallies");
    }
    const std::uint64_t next_class = class_size(occurrence_count + 1);
    return static_cast<double>(occurrence_count + 1) * static_cast<double>(next_class) / l;
}

double SampleSummary::p0_empirical_variance() const {
    if (length_ == 0) throw EmptySampleError();
    const double l = static_cast<double>(length_);
    const double mass = (static_cast<double>(singletons_) + 2.0 * static_cast<double>(doubletons_)) / l;
    const double p0 = static_cast<double>(singletons_) / l;
    return (mass - p0 * p0) / l;
}

std::uint64_t SampleSummary::class_size(std::uint64_t occurrence_count) const {
    if (mode_ != CountMode::Full) {
        throw std::logic_error("class_size needs CountMode::Full tallies");
    }
    std::uint64_t size = 0;
    for (const auto& [id, c] : counts_) {
        if (c == occurrence_count) ++size;
    }
    return size;
}

}  // namespace sampcard
