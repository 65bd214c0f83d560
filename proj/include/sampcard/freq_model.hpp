#ifndef SAMPCARD_FREQ_MODEL_HPP
#define SAMPCARD_FREQ_MODEL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sampcard {

// Generative model of per-element occurrence counts: integer-uniform on
// [lo, hi], or Pareto with shape alpha and scale s (draws are ceil(s*U^(-1/alpha)),
// so s is the smallest possible frequency).
struct FrequencyModel {
    enum class Kind { Uniform, Pareto };

    Kind kind = Kind::Uniform;
    std::int64_t lo = 100;
    std::int64_t hi = 10000;
    double alpha = 1.1;
    double scale = 500.0;

    static FrequencyModel uniform(std::int64_t lo, std::int64_t hi);
    static FrequencyModel pareto(double alpha, double scale);

    // "uniform:LO:HI" or "pareto:ALPHA:SCALE"; throws std::invalid_argument.
    static FrequencyModel parse(std::string_view text);
    std::string to_string() const;

    double mean() const;

    std::vector<std::int64_t> draw(std::size_t n, std::uint64_t seed) const;

    // Deterministic quantile-midpoint grid; stands in for the model when a
    // seed-free frequency list is needed (analytic formulas).
    std::vector<std::int64_t> quantile_grid(std::size_t points = 10000) const;
};

}  // namespace sampcard

#endif
