#include "sampcard/hll.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sampcard {

namespace {

double alpha_for(std::uint32_t m) {
    switch (m) {
        case 16: return 0.673;
        case 32: return 0.697;
        case 64: return 0.709;
        default: return 0.7213 / (1.0 + 1.079 / static_cast<double>(m));
    }
}

}  // namespace

HllSketch::HllSketch(std::uint32_t m) : m_(m) {
    if (m < kMinRegisters || m > kMaxRegisters || !std::has_single_bit(m)) {
        throw std::invalid_argument("register count must be a power of two in [16, 65536], got " +
                                    std::to_string(m));
    }
    index_bits_ = static_cast<std::uint32_t>(std::countr_zero(m));
    registers_.assign(m_, 0);
}

void HllSketch::insert(std::uint64_t hash) {
    const std::uint32_t idx = static_cast<std::uint32_t>(hash >> (64 - index_bits_));
    const std::uint64_t rest = hash << index_bits_;
    // rank over the remaining 64-b bits; all-zero rest maxes out at 64-b+1
    const int rank = rest == 0 ? static_cast<int>(64 - index_bits_) + 1
                               : std::countl_zero(rest) + 1;
    registers_[idx] = std::max(registers_[idx], static_cast<std::uint8_t>(rank));
}

double HllSketch::estimate() const {
    double inv_sum = 0.0;
    std::uint32_t zeros = 0;
    for (std::uint8_t r : registers_) {
        inv_sum += std::ldexp(1.0, -static_cast<int>(r));
        if (r == 0) ++zeros;
    }
    const double m = static_cast<double>(m_);
    const double raw = alpha_for(m_) * m * m / inv_sum;
    if (raw <= 2.5 * m && zeros > 0) {
        return m * std::log(m / static_cast<double>(zeros));
    }
    return raw;
}

std::uint32_t HllSketch::nearest_supported_register_count(std::uint32_t m) {
    std::uint32_t best = kMinRegisters;
    std::uint64_t best_dist = ~0ULL;
    for (std::uint32_t p = kMinRegisters; p <= kMaxRegisters; p <<= 1) {
        const std::uint64_t dist = p > m ? p - m : m - p;
        if (dist < best_dist) {
            best = p;
            best_dist = dist;
        }
        if (p == kMaxRegisters) break;
    }
    return best;
}

}  // namespace sampcard
