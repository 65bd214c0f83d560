#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "sampcard/hash.hpp"
#include "sampcard/hll.hpp"
#include "support/stats.hpp"

using namespace sampcard;

namespace {

double estimate_distinct(std::uint32_t m, std::uint64_t n, std::uint64_t seed) {
    HllSketch sketch(m);
    for (std::uint64_t i = 0; i < n; ++i) sketch.insert(hash_u64(i, seed));
    return sketch.estimate();
}

}  // namespace

TEST_SUITE("hll") {

TEST_CASE("register count must be a power of two in range") {
    CHECK_THROWS_AS(HllSketch(0), std::invalid_argument);
    CHECK_THROWS_AS(HllSketch(8), std::invalid_argument);
    CHECK_THROWS_AS(HllSketch(100), std::invalid_argument);
    CHECK_THROWS_AS(HllSketch(1u << 17), std::invalid_argument);
    CHECK_NOTHROW(HllSketch(16));
    CHECK_NOTHROW(HllSketch(1u << 16));
}

TEST_CASE("empty sketch estimates zero") {
    CHECK(HllSketch(64).estimate() == doctest::Approx(0.0));
}

TEST_CASE("duplicate insertion is idempotent") {
    HllSketch a(64), b(64);
    const std::uint64_t h = hash_bytes("dup", 3);
    a.insert(h);
    b.insert(h);
    b.insert(h);
    CHECK(a.registers() == b.registers());
}

TEST_CASE("a fresh sketch touches exactly one register") {
    HllSketch sketch(256);
    sketch.insert(hash_bytes("x", 0));
    std::size_t nonzero = 0;
    for (auto r : sketch.registers()) nonzero += r != 0;
    CHECK(nonzero == 1);
}

TEST_CASE("registers never decrease and state is permutation invariant") {
    std::mt19937_64 rng(99);
    std::vector<std::uint64_t> hashes(5000);
    for (auto& h : hashes) h = rng();

    HllSketch forward(128);
    std::vector<std::uint8_t> prev(128, 0);
    for (std::uint64_t h : hashes) {
        forward.insert(h);
        for (std::size_t i = 0; i < prev.size(); ++i) {
            CHECK(forward.registers()[i] >= prev[i]);
            CHECK(forward.registers()[i] <= 64);
        }
        prev = forward.registers();
    }

    std::shuffle(hashes.begin(), hashes.end(), rng);
    HllSketch shuffled(128);
    for (std::uint64_t h : hashes) shuffled.insert(h);
    CHECK(shuffled.registers() == forward.registers());
}

TEST_CASE("state depends only on the set of distinct hashes") {
    std::mt19937_64 rng(5);
    std::vector<std::uint64_t> hashes(300);
    for (auto& h : hashes) h = rng();

    HllSketch once(64), repeated(64);
    for (std::uint64_t h : hashes) once.insert(h);
    for (int pass = 0; pass < 3; ++pass) {
        for (std::uint64_t h : hashes) repeated.insert(h);
    }
    CHECK(once.registers() == repeated.registers());
}

TEST_CASE("10k distinct at m=1024 lands within 10% in at least 95 of 100 runs") {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const double est = estimate_distinct(1024, 10000, derive_seed(2024, seed));
        if (std::abs(est - 10000.0) <= 1000.0) ++hits;
    }
    CHECK(hits >= 95);
}

TEST_CASE("mean estimate over 200 runs is within 3% at m=256") {
    // quoted with m=200; runs at the nearest supported register count
    CHECK(HllSketch::nearest_supported_register_count(200) == 256);
    double sum = 0.0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        sum += estimate_distinct(256, 10000, derive_seed(77, seed));
    }
    CHECK(std::abs(sum / 200.0 - 10000.0) / 10000.0 < 0.03);
}

TEST_CASE("relative variance tracks 1.08/m at m in {256, 1024}") {
    for (std::uint32_t m : {256u, 1024u}) {
        std::vector<double> ratios;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            ratios.push_back(estimate_distinct(m, 10000, derive_seed(m, seed)) / 10000.0);
        }
        const double var = teststats::sample_variance(ratios);
        const double expected = 1.08 / static_cast<double>(m);
        CHECK(var / expected > 0.5);
        CHECK(var / expected < 2.0);
    }
}

TEST_CASE("nearest supported register count mapping") {
    CHECK(HllSketch::nearest_supported_register_count(10) == 16);
    CHECK(HllSketch::nearest_supported_register_count(50) == 64);
    CHECK(HllSketch::nearest_supported_register_count(100) == 128);
    CHECK(HllSketch::nearest_supported_register_count(150) == 128);
    CHECK(HllSketch::nearest_supported_register_count(190) == 128);
    CHECK(HllSketch::nearest_supported_register_count(500) == 512);
    CHECK(HllSketch::nearest_supported_register_count(1000) == 1024);
    CHECK(HllSketch::nearest_supported_register_count(1500) == 1024);
    CHECK(HllSketch::nearest_supported_register_count(70000) == 65536);
}

}  // TEST_SUITE
