#ifndef SAMPCARD_HLL_HPP
#define SAMPCARD_HLL_HPP

#include <cstdint>
#include <vector>

namespace sampcard {

// HyperLogLog sketch over 64-bit hashes. The top log2(m) hash bits select a
// register, the rest contribute the leading-zero rank; registers only grow.
// Estimation uses the original alpha_m constants with the small-range
// linear-counting fallback (raw <= 2.5m and an empty register present).
class HllSketch {
public:
    static constexpr std::uint32_t kMinRegisters = 16;
    static constexpr std::uint32_t kMaxRegisters = 1u << 16;

    // m must be a power of two in [16, 65536].
    explicit HllSketch(std::uint32_t m);

    void insert(std::uint64_t hash);
    double estimate() const;

    std::uint32_t register_count() const { return m_; }
    std::uint32_t index_bits() const { return index_bits_; }
    const std::vector<std::uint8_t>& registers() const { return registers_; }

    // Nearest power of two inside the supported range; used when reproducing
    // configurations quoted with arbitrary m.
    static std::uint32_t nearest_supported_register_count(std::uint32_t m);

private:
    std::uint32_t m_;
    std::uint32_t index_bits_;
    std::vector<std::uint8_t> registers_;
};

}  // namespace sampcard

#endif
