#ifndef SAMPCARD_HASH_HPP
#define SAMPCARD_HASH_HPP

#include <cstdint>
#include <cstring>
#include <string_view>

namespace sampcard {

// XXH64: seeded 64-bit non-cryptographic hash (xxHash specification).
// Stable across runs and platforms for a fixed seed; used both for element
// identity (duplicates hash equal) and as the stream of uniform bits the
// sketch consumes.
namespace xxh64_detail {

inline constexpr std::uint64_t kPrime1 = 0x9E3779B185EBCA87ULL;
inline constexpr std::uint64_t kPrime2 = 0xC2B2AE3D27D4EB4FULL;
inline constexpr std::uint64_t kPrime3 = 0x165667B19E3779F9ULL;
inline constexpr std::uint64_t kPrime4 = 0x85EBCA77C2B2AE63ULL;
inline constexpr std::uint64_t kPrime5 = 0x27D4EB2F165667C5ULL;

inline std::uint64_t rotl(std::uint64_t x, int r) {
    return (x << r) | (x >> (64 - r));
}

inline std::uint64_t read64(const unsigned char* p) {
    std::uint64_t v;
    std::memcpy(&v, p, sizeof v);
    return v;  // little-endian hosts only; asserted in tests via fixed vectors
}

inline std::uint32_t read32(const unsigned char* p) {
    std::uint32_t v;
    std::memcpy(&v, p, sizeof v);
    return v;
}

inline std::uint64_t round_step(std::uint64_t acc, std::uint64_t input) {
    acc += input * kPrime2;
    acc = rotl(acc, 31);
    return acc * kPrime1;
}

inline std::uint64_t merge_round(std::uint64_t h, std::uint64_t v) {
    h ^= round_step(0, v);
    return h * kPrime1 + kPrime4;
}

}  // namespace xxh64_detail

inline std::uint64_t hash_bytes(const void* data, std::size_t len, std::uint64_t seed) {
    using namespace xxh64_detail;
    const auto* p = static_cast<const unsigned char*>(data);
    const unsigned char* end = p + len;
    std::uint64_t h;

    if (len >= 32) {
        std::uint64_t v1 = seed + kPrime1 + kPrime2;
        std::uint64_t v2 = seed + kPrime2;
        std::uint64_t v3 = seed;
        std::uint64_t v4 = seed - kPrime1;
        const unsigned char* limit = end - 32;
        do {
            v1 = round_step(v1, read64(p));
            v2 = round_step(v2, read64(p + 8));
            v3 = round_step(v3, read64(p + 16));
            v4 = round_step(v4, read64(p + 24));
            p += 32;
        } while (p <= limit);
        h = rotl(v1, 1) + rotl(v2, 7) + rotl(v3, 12) + rotl(v4, 18);
        h = merge_round(h, v1);
        h = merge_round(h, v2);
        h = merge_round(h, v3);
        h = merge_round(h, v4);
    } else {
        h = seed + kPrime5;
    }

    h += static_cast<std::uint64_t>(len);

    while (p + 8 <= end) {
        h ^= round_step(0, read64(p));
        h = rotl(h, 27) * kPrime1 + kPrime4;
        p += 8;
    }
    if (p + 4 <= end) {
        h ^= static_cast<std::uint64_t>(read32(p)) * kPrime1;
        h = rotl(h, 23) * kPrime2 + kPrime3;
        p += 4;
    }
    while (p < end) {
        h ^= static_cast<std::uint64_t>(*p) * kPrime5;
        h = rotl(h, 11) * kPrime1;
        ++p;
    }

    h ^= h >> 33;
    h *= kPrime2;
    h ^= h >> 29;
    h *= kPrime3;
    h ^= h >> 32;
    return h;
}

inline std::uint64_t hash_bytes(std::string_view s, std::uint64_t seed) {
    return hash_bytes(s.data(), s.size(), seed);
}

// Hash of a 64-bit value, as if its 8 little-endian bytes were hashed.
inline std::uint64_t hash_u64(std::uint64_t value, std::uint64_t seed) {
    unsigned char buf[8];
    std::memcpy(buf, &value, sizeof buf);
    return hash_bytes(buf, sizeof buf, seed);
}

// splitmix64 finalizer; used to derive independent sub-seeds from one seed.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return mix64(base ^ mix64(stream));
}

// Maps a 64-bit word to [0,1) with 53 random bits.
inline double to_unit(std::uint64_t word) {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace sampcard

#endif
