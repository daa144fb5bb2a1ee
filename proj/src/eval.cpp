#include "fixlocus/eval.hpp"

#include <cstdint>

namespace fixlocus {

std::vector<Rational> evaluate_batch_serial(const Polynomial& p,
                                            std::span<const RationalPoint> points) {
    std::vector<Rational> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = p.evaluate(points[i]);
    return out;
}

std::vector<Rational> evaluate_batch(const Polynomial& p,
                                     std::span<const RationalPoint> points) {
    std::vector<Rational> out(points.size());
    const std::int64_t n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) out[i] = p.evaluate(points[i]);
    return out;
}

std::vector<RationalPoint> map_batch_serial(std::span<const Polynomial> components,
                                            std::span<const RationalPoint> points) {
    std::vector<RationalPoint> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<Rational> coords;
        coords.reserve(components.size());
        for (const auto& c : components) coords.push_back(c.evaluate(points[i]));
        out[i] = RationalPoint(std::move(coords));
    }
    return out;
}

std::vector<RationalPoint> map_batch(std::span<const Polynomial> components,
                                     std::span<const RationalPoint> points) {
    std::vector<RationalPoint> out(points.size());
    const std::int64_t n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
        std::vector<Rational> coords;
        coords.reserve(components.size());
        for (const auto& c : components) coords.push_back(c.evaluate(points[i]));
        out[i] = RationalPoint(std::move(coords));
    }
    return out;
}

bool agree_on_points(const Polynomial& p, const Polynomial& q,
                     std::span<const RationalPoint> points) {
    const std::int64_t n = static_cast<std::int64_t>(points.size());
    bool ok = true;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : ok)
    for (std::int64_t i = 0; i < n; ++i) {
        ok = ok && (p.evaluate(points[i]) == q.evaluate(points[i]));
    }
    return ok;
}

}  // namespace fixlocus
