#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "apseq/isometry/check.hpp"
#include "apseq/seqalg/diagonal.hpp"
#include "apseq/seqalg/transforms.hpp"

namespace apseq {

namespace detail {

inline Trace decimate_trace(const Trace& t, std::size_t step) {
    return std::visit([&](const auto& s) -> Trace { return decimate(s, step); }, t);
}

inline std::vector<Trace> decimate_all(const std::vector<Trace>& traces, std::size_t step, std::size_t horizon) {
    std::vector<Trace> out;
    for (const auto& t : traces) {
        Trace d = decimate_trace(t, step);
        out.push_back(std::visit([&](const auto& s) -> Trace { return s.prefix(horizon); }, d));
    }
    return out;
}

/// assess_traces, with a failure reported as a broken precondition.
inline IsometryReport assume_isometry(const std::vector<Trace>& traces, const std::vector<std::string>& labels, std::int64_t m,
                                      const Rational& q, bool finite, const IsometryOptions& opts, const std::string& who) {
    try {
        return assess_traces(traces, labels, m, q, finite, opts);
    } catch (const counterexample& e) {
        throw precondition_failure(who + " is not an (" + std::to_string(m) + ", " + q.str() + ")-isometry on pair " + e.witness());
    }
}

template <MetricSystem S>
void check_power_traces(const S& sys, std::int64_t k, const std::vector<std::pair<typename S::point_type, typename S::point_type>>& pairs,
                        const std::vector<Trace>& decimated, const Rational& q, std::size_t horizon, double tolerance) {
    const auto direct = pair_traces(sys.power(k), pairs, q, horizon, tolerance);
    for (std::size_t i = 0; i < direct.size(); ++i)
        for (std::size_t n = 0; n < horizon; ++n)
            if (std::fabs(trace_value(direct[i], n) - trace_value(decimated[i], n)) >
                tolerance * std::max(1.0, std::fabs(trace_value(direct[i], n))))
                throw internal_consistency("decimated trace differs from the trace of T^" + std::to_string(k));
}

}  // namespace detail

/// T and T^k on the same sample; T^k traces are the k-decimated T traces.
struct PowerTheoremReport {
    std::int64_t k = 1;
    IsometryReport base;
    IsometryReport power;
};

/// T strict (m, q) on the sample implies T^k strict (m, q) on the sample.
///
/// Throws precondition_failure when T is not a strict (m, q)-isometry on the
/// sample and counterexample when T^k is not.
template <MetricSystem S>
PowerTheoremReport verify_power_theorem(const S& sys, std::int64_t k, std::int64_t m, const Rational& q, std::size_t horizon,
                                        const std::vector<std::pair<typename S::point_type, typename S::point_type>>& pairs,
                                        const IsometryOptions& opts = {}) {
    if (k < 1) throw input_error("power k must be at least 1");
    if (horizon < 2) throw insufficient_data("horizon must be at least 2");
    const auto labels = pair_labels<S>(pairs);
    const std::size_t long_horizon = static_cast<std::size_t>(k) * (horizon - 1) + 1;
    const auto traces = pair_traces(sys, pairs, q, long_horizon, opts.tolerance);

    PowerTheoremReport out;
    out.k = k;
    out.base = detail::assume_isometry(traces, labels, m, q, sys.finite(), opts, "T");
    if (!out.base.strict) throw precondition_failure("T is not a strict (" + std::to_string(m) + ", " + q.str() + ")-isometry on the sample");
    const auto decimated = detail::decimate_all(traces, static_cast<std::size_t>(k), horizon);
    detail::check_power_traces(sys, k, pairs, decimated, q, horizon, opts.tolerance);
    out.power = assess_traces(decimated, labels, m, q, sys.finite(), opts);
    if (!out.power.strict)
        throw counterexample("T^" + std::to_string(k), "no sampled pair attains strict order " + std::to_string(m - 1) + " for T^" + std::to_string(k));
    return out;
}

/// T^c, T^d and T^e with e = gcd(c, d) on the same sample.
struct PowerGcdReport {
    std::int64_t e = 1;
    std::int64_t h = 1;
    IsometryReport power_c;
    IsometryReport power_d;
    IsometryReport power_e;
};

/// T^c an (m, q)- and T^d an (ell, q)-isometry on the sample imply T^e an
/// (min(m, ell), q)-isometry for e = gcd(c, d).
template <MetricSystem S>
PowerGcdReport verify_power_gcd(const S& sys, std::int64_t c, std::int64_t m, std::int64_t d, std::int64_t ell, const Rational& q,
                                std::size_t horizon, const std::vector<std::pair<typename S::point_type, typename S::point_type>>& pairs,
                                const IsometryOptions& opts = {}) {
    if (c < 1 || d < 1) throw input_error("powers c and d must be at least 1");
    if (horizon < 2) throw insufficient_data("horizon must be at least 2");
    const auto labels = pair_labels<S>(pairs);
    const std::size_t long_horizon = static_cast<std::size_t>(std::max(c, d)) * (horizon - 1) + 1;
    const auto traces = pair_traces(sys, pairs, q, long_horizon, opts.tolerance);

    PowerGcdReport out;
    out.e = std::gcd(c, d);
    out.h = std::min(m, ell);
    out.power_c = detail::assume_isometry(detail::decimate_all(traces, static_cast<std::size_t>(c), horizon), labels, m, q,
                                          sys.finite(), opts, "T^" + std::to_string(c));
    out.power_d = detail::assume_isometry(detail::decimate_all(traces, static_cast<std::size_t>(d), horizon), labels, ell, q,
                                          sys.finite(), opts, "T^" + std::to_string(d));
    const auto de = detail::decimate_all(traces, static_cast<std::size_t>(out.e), horizon);
    detail::check_power_traces(sys, out.e, pairs, de, q, horizon, opts.tolerance);
    out.power_e = assess_traces(de, labels, out.h, q, sys.finite(), opts);
    return out;
}

/// ST against the (m + n - 1, q) bound through the grid d(S^i T^j x, S^i T^j y)^q.
struct ProductTheoremReport {
    std::int64_t n = 1;
    std::int64_t m = 1;
    /// Largest certified order along T (rows) and along S (columns).
    std::size_t row_order = 0;
    std::size_t col_order = 0;
    IsometryReport product;
};

/// ST = TS, T an (n, q)- and S an (m, q)-isometry on the sample imply ST an
/// (m + n - 1, q)-isometry on the sample.
///
/// Throws hypothesis_violation when the maps do not commute or a grid line
/// exceeds its order.
template <MetricSystem S>
ProductTheoremReport verify_product_theorem(const S& s_map, const S& t_map, std::int64_t n, std::int64_t m, const Rational& q,
                                            std::size_t horizon,
                                            const std::vector<std::pair<typename S::point_type, typename S::point_type>>& pairs,
                                            const IsometryOptions& opts = {}) {
    if (n < 1 || m < 1) throw input_error("n and m must be at least 1");
    if (!s_map.commutes_with(t_map)) throw hypothesis_violation("S and T do not commute");
    if (horizon < 2) throw insufficient_data("horizon must be at least 2");
    const auto labels = pair_labels<S>(pairs);
    const auto st = s_map.compose(t_map);

    ProductTheoremReport out;
    out.n = n;
    out.m = m;
    std::vector<Trace> diagonals;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        // row i: (d(S^i T^j x, S^i T^j y)^q)_j
        std::vector<std::vector<DistancePower>> grid(horizon);
        bool exact = true;
        auto xi = pairs[p].first, yi = pairs[p].second;
        for (std::size_t i = 0; i < horizon; ++i) {
            auto x = xi, y = yi;
            for (std::size_t j = 0; j < horizon; ++j) {
                grid[i].push_back(s_map.distance_power(x, y, q));
                exact = exact && grid[i].back().exact.has_value();
                x = t_map.apply(x);
                y = t_map.apply(y);
            }
            xi = s_map.apply(xi);
            yi = s_map.apply(yi);
        }
        auto run = [&](auto tag) {
            using G = decltype(tag);
            std::vector<std::vector<G>> values(horizon);
            for (std::size_t i = 0; i < horizon; ++i)
                for (const auto& v : grid[i]) {
                    if constexpr (std::is_same_v<G, Rational>) {
                        values[i].push_back(*v.exact);
                    } else {
                        values[i].push_back(v.approx);
                    }
                }
            DoubleSequence<G> dseq = std::is_same_v<G, Rational> ? DoubleSequence<G>(std::move(values))
                                                                  : DoubleSequence<G>(std::move(values), opts.tolerance);
            for (std::size_t i = 0; i < horizon; ++i) {
                auto r = analyze_order(dseq.row(i), OrderOptions{static_cast<std::size_t>(n - 1), opts.min_windows});
                if (r.verdict == OrderVerdict::not_an_ap)
                    throw hypothesis_violation("T is not an (" + std::to_string(n) + ", " + q.str() + ")-isometry on pair " + labels[p]);
                auto c = analyze_order(dseq.col(i), OrderOptions{static_cast<std::size_t>(m - 1), opts.min_windows});
                if (c.verdict == OrderVerdict::not_an_ap)
                    throw hypothesis_violation("S is not an (" + std::to_string(m) + ", " + q.str() + ")-isometry on pair " + labels[p]);
            }
            auto rep = diagonal(dseq, OrderOptions{static_cast<std::size_t>(std::max(n, m) - 1), opts.min_windows});
            out.row_order = std::max(out.row_order, rep.row_order);
            out.col_order = std::max(out.col_order, rep.col_order);
            diagonals.emplace_back(rep.diagonal);
        };
        if (exact) {
            run(Rational{});
        } else {
            run(double{});
        }
    }

    const auto direct = pair_traces(st, pairs, q, horizon, opts.tolerance);
    for (std::size_t i = 0; i < direct.size(); ++i)
        for (std::size_t k = 0; k < horizon; ++k)
            if (std::fabs(trace_value(direct[i], k) - trace_value(diagonals[i], k)) >
                opts.tolerance * std::max(1.0, std::fabs(trace_value(direct[i], k))))
                throw internal_consistency("grid diagonal differs from the trace of ST");
    out.product = assess_traces(diagonals, labels, m + n - 1, q, s_map.finite(), opts);
    return out;
}

}  // namespace apseq
