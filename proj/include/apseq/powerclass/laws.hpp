#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "apseq/diffcalc/order.hpp"

namespace apseq {

/// Exponent/order pair: a^q has strict order h.
struct PowerOrder {
    Rational q;
    std::int64_t h = 0;
    friend bool operator==(const PowerOrder&, const PowerOrder&) = default;
};

/// r k == h q, the relation forced between two strict-order powers of one sequence.
inline bool consistency_rk_hq(const Rational& q, std::int64_t k, const Rational& r, std::int64_t h) {
    return r * Rational(k) == Rational(h) * q;
}

/// With d = gcd(k, h): a^t has strict order d where t = q d / k = r d / h.
inline PowerOrder reduce_gcd(const Rational& q, std::int64_t k, const Rational& r, std::int64_t h) {
    if (k < 1 || h < 1) throw precondition_failure("reduce_gcd needs orders k, h >= 1");
    if (!consistency_rk_hq(q, k, r, h))
        throw precondition_failure("inconsistent powers: " + r.str() + "*" + std::to_string(k) + " != " + std::to_string(h) + "*" + q.str());
    const std::int64_t d = std::gcd(k, h);
    Rational t = q * Rational(d) / Rational(k);
    if (t != r * Rational(d) / Rational(h)) throw internal_consistency("reduce_gcd exponents disagree");
    return {t, d};
}

/// Predicted strict order of a^(q+r) from those of a^q and a^r.
inline PowerOrder combine(const Rational& q, std::int64_t k, const Rational& r, std::int64_t h) { return {q + r, k + h}; }

/// Eventual monotonicity of a positive progression.
struct Monotonicity {
    bool constant = false;
    /// p(n+1) >= p(n) for all n >= increasing_from.
    std::int64_t increasing_from = 0;
    friend bool operator==(const Monotonicity&, const Monotonicity&) = default;
};

namespace detail {

inline double to_real(const Rational& x) { return x.to_double(); }
inline double to_real(double x) { return x; }

}  // namespace detail

/// Constant when the certified order is 0; otherwise the smallest n0 such that the
/// fitted polynomial p satisfies p(n+1) >= p(n) for every n >= n0.
///
/// Requires a positive leading coefficient; a negative one means the prefix cannot
/// extend to a positive progression.
template <class G>
    requires std::same_as<G, Rational> || std::same_as<G, double>
Monotonicity eventual_monotonicity(const OrderReport<G>& report) {
    if (!report.certified()) throw precondition_failure("eventual_monotonicity needs a certified order");
    const std::size_t h = report.order();
    if (h == 0) return {true, 0};
    const auto& gamma = report.monomial->coefficients;
    if (!(detail::to_real(gamma[h]) > 0))
        throw hypothesis_violation("leading coefficient of the fitted polynomial is not positive");

    // delta(n) = p(n+1) - p(n) = sum_j gamma_j ((n+1)^j - n^j), degree h-1.
    std::vector<G> delta(h);
    for (std::size_t j = 1; j <= h; ++j)
        for (std::size_t i = 0; i < j; ++i)
            delta[i] = delta[i] + element_traits<G>::scale(gamma[j], binomial(static_cast<std::int64_t>(j), static_cast<std::int64_t>(i)));
    auto eval = [&](std::int64_t n) {
        G acc = element_traits<G>::zero_like(gamma[0]);
        for (std::size_t i = delta.size(); i-- > 0;) acc = element_traits<G>::scale(acc, BigInteger(n)) + delta[i];
        return acc;
    };
    auto negative = [&](const G& v) {
        if constexpr (std::same_as<G, Rational>) {
            return v.sign() < 0;
        } else {
            double scale = 0.0;
            for (const auto& c : delta) scale = std::max(scale, std::fabs(c));
            return v < -report.tolerance * scale;
        }
    };

    // Cauchy bound: delta has no real root beyond 1 + max |delta_i / delta_lead|.
    double bound = 0.0;
    const double lead = detail::to_real(delta.back());
    for (std::size_t i = 0; i + 1 < delta.size(); ++i) bound = std::max(bound, std::fabs(detail::to_real(delta[i]) / lead));
    const auto top = static_cast<std::int64_t>(std::ceil(bound)) + 1;
    for (std::int64_t n = top; n-- > 0;)
        if (negative(eval(n))) return {false, n + 1};
    return {false, 0};
}

}  // namespace apseq
