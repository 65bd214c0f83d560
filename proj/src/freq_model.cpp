#include "sampcard/freq_model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sampcard {

FrequencyModel FrequencyModel::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("uniform model needs 1 <= lo <= hi");
    FrequencyModel m;
    m.kind = Kind::Uniform;
    m.lo = lo;
    m.hi = hi;
    return m;
}

FrequencyModel FrequencyModel::pareto(double alpha, double scale) {
    if (!(alpha > 0.0) || !(scale > 0.0)) throw std::invalid_argument("pareto model needs alpha > 0 and scale > 0");
    FrequencyModel m;
    m.kind = Kind::Pareto;
    m.alpha = alpha;
    m.scale = scale;
    return m;
}

FrequencyModel FrequencyModel::parse(std::string_view text) {
    const auto split = [](std::string_view s) {
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (true) {
            const std::size_t colon = s.find(':', pos);
            if (colon == std::string_view::npos) {
                parts.emplace_back(s.substr(pos));
                break;
            }
            parts.emplace_back(s.substr(pos, colon - pos));
            pos = colon + 1;
        }
        return parts;
    };
    const std::vector<std::string> parts = split(text);
    try {
        if (parts.size() == 3 && parts[0] == "uniform") {
            return uniform(std::stoll(parts[1]), std::stoll(parts[2]));
        }
        if (parts.size() == 3 && parts[0] == "pareto") {
            return pareto(std::stod(parts[1]), std::stod(parts[2]));
        }
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw std::invalid_argument("frequency model must be uniform:LO:HI or pareto:ALPHA:SCALE, got '" +
                                std::string(text) + "'");
}

std::string FrequencyModel::to_string() const {
    if (kind == Kind::Uniform) {
        return "uniform:" + std::to_string(lo) + ":" + std::to_string(hi);
    }
    return "pareto:" + std::to_string(alpha) + ":" + std::to_string(scale);
}

double FrequencyModel::mean() const {
    if (kind == Kind::Uniform) return 0.5 * (static_cast<double>(lo) + static_cast<double>(hi));
    if (alpha <= 1.0) return std::numeric_limits<double>::infinity();
    return alpha * scale / (alpha - 1.0);
}

std::vector<std::int64_t> FrequencyModel::draw(std::size_t n, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> freqs(n);
    if (kind == Kind::Uniform) {
        std::uniform_int_distribution<std::int64_t> dist(lo, hi);
        for (auto& f : freqs) f = dist(rng);
    } else {
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        for (auto& f : freqs) {
            double u = dist(rng);
            while (u <= 0.0) u = dist(rng);
            f = static_cast<std::int64_t>(std::ceil(scale * std::pow(u, -1.0 / alpha)));
        }
    }
    return freqs;
}

std::vector<std::int64_t> FrequencyModel::quantile_grid(std::size_t points) const {
    std::vector<std::int64_t> freqs(points);
    for (std::size_t k = 0; k < points; ++k) {
        const double q = (static_cast<double>(k) + 0.5) / static_cast<double>(points);
        if (kind == Kind::Uniform) {
            const auto span = static_cast<double>(hi - lo + 1);
            freqs[k] = std::min(hi, lo + static_cast<std::int64_t>(q * span));
        } else {
            freqs[k] = static_cast<std::int64_t>(std::ceil(scale * std::pow(1.0 - q, -1.0 / alpha)));
        }
    }
    return freqs;
}

}  // namespace sampcard
