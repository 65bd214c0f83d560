#include "sampcard/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sampcard/errors.hpp"

namespace sampcard {

namespace {

void check_rate(double rate) {
    if (!(rate > 0.0) || !(rate < 1.0)) {
        throw std::invalid_argument("sampling rate must be in (0, 1)");
    }
}

}  // namespace

double expected_p0(std::span<const std::int64_t> freqs, double rate, bool exact_tail) {
    check_rate(rate);
    if (freqs.empty()) throw std::invalid_argument("frequency list must be nonempty");
    double sum = 0.0;
    if (exact_tail) {
        const double log1m = std::log1p(-rate);
        for (std::int64_t f : freqs) sum += std::exp(static_cast<double>(f) * log1m);
    } else {
        for (std::int64_t f : freqs) sum += std::exp(-rate * static_cast<double>(f));
    }
    return sum / static_cast<double>(freqs.size());
}

double expected_p1(std::span<const std::int64_t> freqs, double rate, bool exact_tail) {
    check_rate(rate);
    if (freqs.empty()) throw std::invalid_argument("frequency list must be nonempty");
    double sum = 0.0;
    if (exact_tail) {
        const double log1m = std::log1p(-rate);
        for (std::int64_t f : freqs) {
            const double fd = static_cast<double>(f);
            sum += fd * rate * std::exp((fd - 1.0) * log1m);
        }
    } else {
        for (std::int64_t f : freqs) {
            const double fd = static_cast<double>(f);
            sum += rate * fd * std::exp(-rate * fd);
        }
    }
    return sum / static_cast<double>(freqs.size());
}

double rel_variance_exact(double p0, double p1, double l, double m) {
    if (!(p0 >= 0.0) || p0 >= 1.0) throw std::invalid_argument("p0 must be in [0, 1)");
    if (!(l >= 1.0) || !(m >= 1.0)) throw std::invalid_argument("l and m must be >= 1");
    const double q = 1.0 - p0;
    return (p0 * q + p1) / (q * q) / l + 1.0 / m;
}

double rel_variance_subsampled(double p0, double p1, double u, double m, double are) {
    if (!(p0 >= 0.0) || p0 >= 1.0) throw std::invalid_argument("p0 must be in [0, 1)");
    if (!(u >= 1.0) || !(m >= 1.0)) throw std::invalid_argument("u and m must be >= 1");
    if (!(are > 0.0)) throw std::invalid_argument("are must be positive");
    const double q = 1.0 - p0;
    return (2.0 * p0 * q + p1) / (q * q) / u + 1.0 / (are * m);
}

BudgetSplit optimal_split(std::int64_t budget, double p0, double p1, double are) {
    if (budget < 2) throw InfeasibleBudgetError(budget);
    if (!(p0 >= 0.0) || p0 >= 1.0) throw std::invalid_argument("p0 must be in [0, 1)");
    const double q = 1.0 - p0;
    const double c = are * (2.0 * p0 * q + p1) / (q * q);
    const double b = static_cast<double>(budget);
    const double u_star = b * std::sqrt(c) / (1.0 + std::sqrt(c));

    const auto clamp_u = [&](std::int64_t u) {
        return std::clamp<std::int64_t>(u, 1, budget - 1);
    };
    const std::int64_t lo = clamp_u(static_cast<std::int64_t>(std::floor(u_star)));
    const std::int64_t hi = clamp_u(static_cast<std::int64_t>(std::ceil(u_star)));

    BudgetSplit best{budget, 0, 0, 0.0};
    bool have = false;
    for (std::int64_t u : {lo, hi}) {
        const std::int64_t m = budget - u;
        const double v = rel_variance_subsampled(p0, p1, static_cast<double>(u),
                                                 static_cast<double>(m), are);
        // strictly better, or an exact tie resolved toward the larger sketch
        if (!have || v < best.predicted_rel_variance ||
            (v == best.predicted_rel_variance && m > best.sketch_units)) {
            best = BudgetSplit{budget, m, u, v};
            have = true;
        }
    }
    return best;
}

}  // namespace sampcard
