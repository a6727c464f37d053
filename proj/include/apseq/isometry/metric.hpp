#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "apseq/error.hpp"
#include "apseq/exactnum/rational.hpp"

namespace apseq {

/// Points 0..P-1 with a P x P distance table.
struct FiniteMetricSpace {
    std::vector<std::vector<Rational>> dist;

    std::size_t size() const noexcept { return dist.size(); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return dist[i][j]; }
    friend bool operator==(const FiniteMetricSpace&, const FiniteMetricSpace&) = default;
};

/// First failed metric axiom, with the offending indices.
struct MetricViolation {
    std::string axiom;
    std::size_t i = 0, j = 0, k = 0;
    std::string message;
};

/// Exhaustive check of shape, zero diagonal, positivity, symmetry and the triangle
/// inequality, in that order.
inline std::optional<MetricViolation> metric_violation(const FiniteMetricSpace& space) {
    const std::size_t p = space.size();
    auto at = [](std::size_t a, std::size_t b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; };
    if (p == 0) return MetricViolation{"shape", 0, 0, 0, "metric space has no points"};
    for (std::size_t i = 0; i < p; ++i)
        if (space.dist[i].size() != p) return MetricViolation{"shape", i, 0, 0, "row " + std::to_string(i) + " has the wrong length"};
    for (std::size_t i = 0; i < p; ++i)
        if (!space(i, i).is_zero()) return MetricViolation{"identity", i, i, 0, "d" + at(i, i) + " != 0"};
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            if (i != j && space(i, j).sign() <= 0) return MetricViolation{"positivity", i, j, 0, "d" + at(i, j) + " <= 0"};
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j)
            if (space(i, j) != space(j, i)) return MetricViolation{"symmetry", i, j, 0, "d" + at(i, j) + " != d" + at(j, i)};
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t k = 0; k < p; ++k)
                if (space(i, k) > space(i, j) + space(j, k))
                    return MetricViolation{"triangle", i, j, k, "d" + at(i, k) + " > d" + at(i, j) + " + d" + at(j, k)};
    return std::nullopt;
}

/// True for a valid metric; throws input_error naming the first violated axiom.
inline bool validate_metric(const FiniteMetricSpace& space) {
    if (auto v = metric_violation(space)) throw input_error(v->axiom + " axiom fails: " + v->message);
    return true;
}

}  // namespace apseq
