#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apseq/diffcalc/difference.hpp"
#include "apseq/diffcalc/sequence.hpp"
#include "apseq/exactnum/combinatorics.hpp"

namespace apseq {

/// gamma_0 + gamma_1 n + ... + gamma_h n^h
template <GroupElement G>
struct PolynomialForm {
    std::vector<G> coefficients;

    /// Index of the last nonzero coefficient (0 for the zero polynomial).
    std::size_t degree() const {
        for (std::size_t i = coefficients.size(); i-- > 0;)
            if (!element_traits<G>::is_zero(coefficients[i])) return i;
        return 0;
    }

    G evaluate(std::int64_t n) const {
        G acc = element_traits<G>::zero_like(coefficients.front());
        BigInteger power = 1;
        for (const auto& c : coefficients) {
            acc = acc + element_traits<G>::scale(c, power);
            power *= n;
        }
        return acc;
    }

    friend bool operator==(const PolynomialForm&, const PolynomialForm&) = default;
};

enum class OrderVerdict { certified, not_an_ap, inconclusive };

inline const char* to_string(OrderVerdict v) {
    switch (v) {
        case OrderVerdict::certified: return "certified";
        case OrderVerdict::not_an_ap: return "not_an_ap";
        default: return "inconclusive";
    }
}

struct OrderOptions {
    /// Largest order tried; npos means "as large as the horizon allows".
    std::size_t max_order = std::numeric_limits<std::size_t>::max();
    /// Vanishing windows of D^{h+1} required before order h is certified.
    std::size_t min_windows = 1;
};

/// Outcome of order detection on a finite prefix.
///
/// Orders 0 .. orders_excluded-1 were refuted by a nonvanishing window of the
/// corresponding next difference. When verdict == certified, certified_order is
/// the smallest order whose next difference vanishes on all windows_checked windows.
template <GroupElement G>
struct OrderReport {
    std::size_t horizon = 0;
    Mode mode = Mode::exact;
    double tolerance = 0.0;
    std::size_t max_order = 0;
    std::size_t min_windows = 1;
    OrderVerdict verdict = OrderVerdict::inconclusive;
    std::size_t orders_excluded = 0;
    std::optional<std::size_t> certified_order;
    std::size_t windows_checked = 0;
    bool strict = false;
    /// D^k a_0 for k = 0..h.
    std::vector<G> newton_coeffs;
    /// a_0..a_h, the interpolation nodes.
    std::vector<G> nodes;
    std::optional<PolynomialForm<G>> monomial;

    bool certified() const noexcept { return verdict == OrderVerdict::certified; }
    std::size_t order() const {
        if (!certified_order) throw precondition_failure("report carries no certified order");
        return *certified_order;
    }
    const G& leading() const {
        if (newton_coeffs.empty()) throw precondition_failure("report carries no certified order");
        return newton_coeffs.back();
    }

    friend bool operator==(const OrderReport&, const OrderReport&) = default;
};

namespace detail {

/// Zero test for D^j at window n given the raw magnitudes of the sequence.
template <GroupElement G>
bool difference_vanishes(const G& value, std::span<const double> magnitudes, std::size_t n, std::size_t j,
                         double tolerance) {
    if constexpr (element_traits<G>::exact) {
        return element_traits<G>::is_zero(value);
    } else {
        double bound = 0.0;
        const auto jj = static_cast<std::int64_t>(j);
        for (std::int64_t k = 0; k <= jj; ++k)
            bound += binomial(jj, k).template convert_to<double>() * magnitudes[n + static_cast<std::size_t>(k)];
        return element_traits<G>::magnitude(value) <= tolerance * bound;
    }
}

}  // namespace detail

/// gamma_j = sum_{k>=j} s(k, j) / k! * D^k a_0, expanding C(n, k) into powers of n.
template <GroupElement G>
PolynomialForm<G> monomial_from_newton(const std::vector<G>& newton) {
    if constexpr (!element_traits<G>::divisible) {
        throw unsupported_form("monomial form needs a divisible group");
    } else {
        if (newton.empty()) throw precondition_failure("empty Newton coefficient list");
        const std::size_t h = newton.size() - 1;
        const auto s = stirling_first_kind(h);
        PolynomialForm<G> form;
        form.coefficients.reserve(h + 1);
        for (std::size_t j = 0; j <= h; ++j) {
            G acc = element_traits<G>::zero_like(newton.front());
            for (std::size_t k = j; k <= h; ++k) {
                if (s[k][j].is_zero()) continue;
                Rational w(s[k][j], factorial(static_cast<std::int64_t>(k)));
                acc = acc + element_traits<G>::scale(newton[k], w);
            }
            form.coefficients.push_back(std::move(acc));
        }
        return form;
    }
}

/// Non-throwing order detection. See OrderReport for the meaning of each field.
template <GroupElement G>
OrderReport<G> analyze_order(const Sequence<G>& seq, OrderOptions opts = {}) {
    const std::size_t n = seq.size();
    if (n < 2) throw insufficient_data("order detection needs at least two terms");
    if (opts.min_windows < 1) throw input_error("min_windows must be at least 1");

    OrderReport<G> report;
    report.horizon = n;
    report.mode = seq.mode();
    report.tolerance = seq.tolerance();
    report.max_order = std::min(opts.max_order, n - 2);
    report.min_windows = opts.min_windows;

    std::vector<double> mags;
    if constexpr (!element_traits<G>::exact) {
        mags.reserve(n);
        for (const auto& e : seq) mags.push_back(element_traits<G>::magnitude(e));
    }

    std::vector<G> level = seq.elements();  // D^h, starting at h = 0
    std::vector<G> newton{level.front()};
    for (std::size_t h = 0; h <= report.max_order; ++h) {
        // next = D^{h+1}
        std::vector<G> next;
        next.reserve(level.size() - 1);
        for (std::size_t i = 0; i + 1 < level.size(); ++i) next.push_back(level[i + 1] - level[i]);

        bool all_vanish = true;
        for (std::size_t w = 0; w < next.size(); ++w) {
            if (!detail::difference_vanishes<G>(next[w], mags, w, h + 1, seq.tolerance())) {
                all_vanish = false;
                break;
            }
        }
        if (!all_vanish) {
            report.orders_excluded = h + 1;
            newton.push_back(next.front());
            level = std::move(next);
            continue;
        }
        if (next.size() < opts.min_windows) {
            report.verdict = OrderVerdict::inconclusive;
            return report;
        }

        report.verdict = OrderVerdict::certified;
        report.certified_order = h;
        report.windows_checked = next.size();
        report.newton_coeffs = newton;
        report.nodes.assign(seq.elements().begin(), seq.elements().begin() + static_cast<std::ptrdiff_t>(h + 1));
        report.strict = !detail::difference_vanishes<G>(newton.back(), mags, 0, h, seq.tolerance());
        if constexpr (element_traits<G>::divisible) report.monomial = monomial_from_newton(newton);
        return report;
    }
    // Every order up to max_order was refuted. If the horizon, not max_order,
    // stopped the search, higher orders remain open.
    report.verdict = (opts.max_order > report.max_order) ? OrderVerdict::inconclusive : OrderVerdict::not_an_ap;
    return report;
}

/// Smallest h <= max_order whose (h+1)-st difference vanishes on at least
/// min_windows windows of the prefix.
///
/// Throws not_an_ap when every order up to max_order is refuted and inconclusive
/// when the horizon is too short to decide.
template <GroupElement G>
OrderReport<G> certified_order(const Sequence<G>& seq, std::size_t max_order, std::size_t min_windows = 1) {
    auto report = analyze_order(seq, OrderOptions{max_order, min_windows});
    if (report.verdict == OrderVerdict::not_an_ap)
        throw not_an_ap(report.max_order, "no order <= " + std::to_string(report.max_order) + " fits the prefix");
    if (report.verdict == OrderVerdict::inconclusive)
        throw inconclusive("horizon of " + std::to_string(seq.size()) + " terms cannot decide the order (min_windows " +
                           std::to_string(min_windows) + ")");
    return report;
}

/// Monomial coefficients of a certified report.
template <GroupElement G>
PolynomialForm<G> monomial_form(const OrderReport<G>& report) {
    if (!report.certified()) throw precondition_failure("monomial form needs a certified order");
    return monomial_from_newton(report.newton_coeffs);
}

}  // namespace apseq
