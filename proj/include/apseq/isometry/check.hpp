#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apseq/isometry/system.hpp"
#include "apseq/powerclass/classify.hpp"

namespace apseq {

struct IsometryOptions {
    std::size_t min_windows = 1;
    double tolerance = kDefaultTolerance;
    /// Relative exponents tried when reducing the top trace to its proper order.
    std::vector<Rational> proper_candidates{Rational(1, 2), Rational(1), Rational(2)};
};

/// Certified order of one sampled pair trace.
struct PairOrder {
    std::string pair;
    std::size_t order = 0;
    bool strict = false;
    Mode mode = Mode::exact;
    friend bool operator==(const PairOrder&, const PairOrder&) = default;
};

/// Proper (m, q) on the sample; no q means an isometry for every q.
struct ProperIsometry {
    std::int64_t m = 1;
    std::optional<Rational> q;
    /// Every sampled trace, raised to q / q_input, has order <= m - 1.
    bool consistent_on_sample = false;
    friend bool operator==(const ProperIsometry&, const ProperIsometry&) = default;
};

/// (m, q)-isometry certificate on a finite sample of pairs.
///
/// aggregate_m = 1 + max certified pair order <= m. strict_witness names a pair
/// whose trace has strict order m - 1, so strict == (aggregate_m == m).
struct IsometryReport {
    std::int64_t m = 1;
    Rational q;
    std::size_t horizon = 0;
    std::size_t min_windows = 1;
    std::size_t pairs_checked = 0;
    std::vector<PairOrder> pair_orders;
    std::int64_t aggregate_m = 1;
    std::optional<std::string> strict_witness;
    bool strict = false;
    std::optional<ProperIsometry> proper;
    /// A trace on a finite space certified order >= 1. Such traces are bounded, so a
    /// non-constant polynomial fit is an artifact of the horizon.
    bool finiteness_conflict = false;
    friend bool operator==(const IsometryReport&, const IsometryReport&) = default;
};

namespace detail {

inline Trace trace_power(const Trace& t, const Rational& s, double tolerance) {
    if (auto e = std::get_if<Sequence<Rational>>(&t); e && s.is_integer() && s.sign() > 0) {
        std::vector<Rational> v;
        for (const auto& x : *e) v.push_back(pow(x, to_int64(s.numerator())));
        return Sequence<Rational>(std::move(v));
    }
    std::vector<double> v;
    for (std::size_t i = 0; i < trace_size(t); ++i) v.push_back(std::pow(trace_value(t, i), s.to_double()));
    return Sequence<double>(std::move(v), trace_mode(t) == Mode::exact ? tolerance : std::get<Sequence<double>>(t).tolerance());
}

inline OrderSummary analyze_trace(const Trace& t, OrderOptions opts) {
    return std::visit(
        [&](const auto& s) {
            auto r = analyze_order(s, opts);
            return OrderSummary{r.verdict, r.certified_order, r.orders_excluded, r.strict, r.mode};
        },
        t);
}

inline bool trace_positive(const Trace& t) {
    for (std::size_t i = 0; i < trace_size(t); ++i)
        if (!(trace_value(t, i) > 0.0)) return false;
    if (auto e = std::get_if<Sequence<Rational>>(&t))
        for (const auto& x : *e)
            if (x.sign() <= 0) return false;
    return true;
}

inline PositiveSequence as_positive(const Trace& t) {
    return std::visit([](const auto& s) { return PositiveSequence(s); }, t);
}

inline std::optional<ProperIsometry> reduce_proper(const std::vector<Trace>& traces, std::size_t top, std::int64_t aggregate_m,
                                                   const Rational& q, const IsometryOptions& opts) {
    if (aggregate_m == 1) return ProperIsometry{1, std::nullopt, true};
    if (!trace_positive(traces[top])) return std::nullopt;
    auto candidates = opts.proper_candidates;
    candidates.push_back(Rational(1));
    const auto cls = classify(as_positive(traces[top]), candidates, trace_size(traces[top]) - 2, opts.min_windows);
    if (cls.variant != PowerClass::proper) return std::nullopt;
    const auto& p = *cls.proper;
    ProperIsometry out{p.ell + 1, q * p.s, true};
    for (const auto& t : traces) {
        auto r = analyze_trace(trace_power(t, p.s, opts.tolerance), OrderOptions{static_cast<std::size_t>(p.ell), opts.min_windows});
        if (r.verdict != OrderVerdict::certified) out.consistent_on_sample = false;
    }
    return out;
}

}  // namespace detail

/// Certifies order <= m - 1 on every labelled trace.
///
/// Throws counterexample naming the first pair whose trace refutes every order
/// <= m - 1, and inconclusive when the horizon is below m + min_windows.
inline IsometryReport assess_traces(const std::vector<Trace>& traces, const std::vector<std::string>& labels, std::int64_t m,
                                    const Rational& q, bool finite_space, const IsometryOptions& opts = {}) {
    if (m < 1) throw input_error("m must be at least 1");
    if (q.sign() <= 0) throw input_error("exponent q must be positive, got " + q.str());
    if (opts.min_windows < 1) throw input_error("min_windows must be at least 1");
    if (traces.empty()) throw input_error("no pairs to check");
    IsometryReport out;
    out.m = m;
    out.q = q;
    out.horizon = trace_size(traces.front());
    out.min_windows = opts.min_windows;
    out.pairs_checked = traces.size();
    if (out.horizon < static_cast<std::size_t>(m) + opts.min_windows)
        throw inconclusive("horizon of " + std::to_string(out.horizon) + " terms is below m + min_windows = " +
                           std::to_string(static_cast<std::size_t>(m) + opts.min_windows));

    const OrderOptions line{static_cast<std::size_t>(m - 1), opts.min_windows};
    std::size_t top = 0;
    for (std::size_t i = 0; i < traces.size(); ++i) {
        const auto r = detail::analyze_trace(traces[i], line);
        if (r.verdict == OrderVerdict::not_an_ap)
            throw counterexample(labels[i], "pair " + labels[i] + " violates the (" + std::to_string(m) + ", " + q.str() +
                                                ")-isometry bound: its trace has order above " + std::to_string(m - 1));
        if (r.verdict != OrderVerdict::certified) throw inconclusive("pair " + labels[i] + " cannot be decided on the horizon");
        out.pair_orders.push_back({labels[i], *r.order, r.strict, r.mode});
        const auto order = static_cast<std::int64_t>(*r.order);
        if (order + 1 > out.aggregate_m) {
            out.aggregate_m = order + 1;
            top = i;
        }
        if (order == m - 1 && r.strict && !out.strict_witness) out.strict_witness = labels[i];
        if (finite_space && order >= 1) out.finiteness_conflict = true;
    }
    out.strict = out.strict_witness.has_value();
    out.proper = detail::reduce_proper(traces, top, out.aggregate_m, q, opts);
    return out;
}

template <MetricSystem S>
std::vector<std::string> pair_labels(const std::vector<std::pair<typename S::point_type, typename S::point_type>>& pairs) {
    std::vector<std::string> labels;
    for (const auto& [x, y] : pairs) labels.push_back("[" + S::describe(x) + ", " + S::describe(y) + "]");
    return labels;
}

template <MetricSystem S>
std::vector<Trace> pair_traces(const S& sys, const std::vector<std::pair<typename S::point_type, typename S::point_type>>& pairs,
                               const Rational& q, std::size_t horizon, double tolerance) {
    std::vector<Trace> traces;
    traces.reserve(pairs.size());
    for (const auto& [x, y] : pairs) traces.push_back(pair_trace(sys, x, y, q, horizon, tolerance));
    return traces;
}

/// Every sampled pair trace has order <= m - 1 on the horizon.
template <MetricSystem S>
IsometryReport check_mq_isometry(const S& sys, std::int64_t m, const Rational& q, std::size_t horizon,
                                 const std::vector<std::pair<typename S::point_type, typename S::point_type>>& pairs,
                                 const IsometryOptions& opts = {}) {
    if (m < 1) throw input_error("m must be at least 1");
    if (q.sign() <= 0) throw input_error("exponent q must be positive, got " + q.str());
    return assess_traces(pair_traces(sys, pairs, q, horizon, opts.tolerance), pair_labels<S>(pairs), m, q, sys.finite(), opts);
}

template <MetricSystem S>
IsometryReport check_mq_isometry(const S& sys, std::int64_t m, const Rational& q, std::size_t horizon,
                                 const IsometryOptions& opts = {}) {
    return check_mq_isometry(sys, m, q, horizon, sys.sample_pairs(), opts);
}

/// rho_T(x, y) and its two routes: the alternating sum of the first m trace terms
/// and (m-1)! times the fitted coefficient of n^{m-1}.
struct RhoReport {
    Mode mode = Mode::exact;
    /// rho^q, exact when the trace is.
    std::optional<Rational> rho_q_exact;
    double rho_q = 0.0;
    double rho = 0.0;
    double fitted_rho_q = 0.0;
    friend bool operator==(const RhoReport&, const RhoReport&) = default;
};

/// Throws hypothesis_violation when the pair trace is not of order <= m - 1 on the
/// horizon or the alternating sum is negative.
template <MetricSystem S>
RhoReport rho(const S& sys, std::int64_t m, const Rational& q, const typename S::point_type& x, const typename S::point_type& y,
              std::size_t horizon = 0, const IsometryOptions& opts = {}) {
    if (m < 1) throw input_error("m must be at least 1");
    horizon = std::max(horizon, static_cast<std::size_t>(m) + opts.min_windows);
    const Trace t = pair_trace(sys, x, y, q, std::max<std::size_t>(horizon, 2), opts.tolerance);
    const std::size_t top = static_cast<std::size_t>(m - 1);
    const BigInteger mf = factorial(m - 1);

    RhoReport out;
    out.mode = trace_mode(t);
    std::visit(
        [&](const auto& s) {
            using G = typename std::decay_t<decltype(s)>::element_type;
            auto r = analyze_order(s, OrderOptions{top, opts.min_windows});
            if (!r.certified()) throw hypothesis_violation("pair trace is not of order <= " + std::to_string(top) + " on the horizon");
            G sum = element_traits<G>::zero_like(s[0]);
            double scale = 0.0;
            for (std::size_t k = 0; k <= top; ++k) {
                const auto kk = static_cast<std::int64_t>(k);
                const BigInteger c = binomial(m - 1, kk) * alternating_sign(m - 1 - kk);
                sum = sum + element_traits<G>::scale(s[k], c);
                scale += std::fabs(c.template convert_to<double>()) * element_traits<G>::magnitude(s[k]);
            }
            G fitted = element_traits<G>::zero_like(s[0]);
            if (r.order() == top) fitted = element_traits<G>::scale(r.monomial->coefficients[top], mf);
            if constexpr (std::is_same_v<G, Rational>) {
                if (sum.sign() < 0) throw hypothesis_violation("alternating sum is negative: " + sum.str());
                if (fitted != sum) throw internal_consistency("rho^q disagrees with the fitted leading coefficient");
                out.rho_q_exact = sum;
                out.rho_q = sum.to_double();
                out.fitted_rho_q = fitted.to_double();
            } else {
                const double slack = opts.tolerance * std::max(scale, 1.0);
                if (sum < -slack) throw hypothesis_violation("alternating sum is negative: " + std::to_string(sum));
                if (std::fabs(fitted - sum) > slack) throw internal_consistency("rho^q disagrees with the fitted leading coefficient");
                out.rho_q = std::max(sum, 0.0);
                out.fitted_rho_q = fitted;
            }
        },
        t);
    out.rho = std::pow(out.rho_q, 1.0 / q.to_double());
    return out;
}

}  // namespace apseq
