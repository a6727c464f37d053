#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "apseq/diffcalc/order.hpp"

namespace apseq {

/// Sequence of strictly positive reals, held exactly (Rational) or as doubles.
class PositiveSequence {
public:
    explicit PositiveSequence(Sequence<Rational> values) : data_(std::move(values)) { check(); }
    explicit PositiveSequence(Sequence<double> values) : data_(std::move(values)) { check(); }
    explicit PositiveSequence(std::vector<Rational> values) : PositiveSequence(Sequence<Rational>(std::move(values))) {}
    explicit PositiveSequence(std::vector<double> values) : PositiveSequence(Sequence<double>(std::move(values))) {}

    std::size_t size() const {
        return std::visit([](const auto& s) { return s.size(); }, data_);
    }
    Mode mode() const { return exact() ? Mode::exact : Mode::approximate; }
    bool exact() const noexcept { return std::holds_alternative<Sequence<Rational>>(data_); }
    double tolerance() const {
        return std::visit([](const auto& s) { return s.tolerance(); }, data_);
    }
    double value(std::size_t i) const {
        if (exact()) return std::get<Sequence<Rational>>(data_)[i].to_double();
        return std::get<Sequence<double>>(data_)[i];
    }

    const Sequence<Rational>& exact_values() const { return std::get<Sequence<Rational>>(data_); }
    const Sequence<double>& approximate_values() const { return std::get<Sequence<double>>(data_); }

    /// All values equal, exactly or within the relative tolerance.
    bool is_constant() const {
        if (exact()) {
            const auto& s = exact_values();
            for (const auto& x : s)
                if (x != s[0]) return false;
            return true;
        }
        const auto& s = approximate_values();
        for (double x : s)
            if (std::fabs(x - s[0]) > s.tolerance() * std::max(std::fabs(x), std::fabs(s[0]))) return false;
        return true;
    }

    /// Applies f to whichever representation is held.
    template <class F>
    decltype(auto) visit(F&& f) const {
        return std::visit(std::forward<F>(f), data_);
    }

private:
    void check() const {
        std::visit(
            [](const auto& s) {
                for (std::size_t i = 0; i < s.size(); ++i) {
                    bool positive;
                    if constexpr (std::is_same_v<std::decay_t<decltype(s[i])>, Rational>) {
                        positive = s[i].sign() > 0;
                    } else {
                        positive = s[i] > 0.0 && std::isfinite(s[i]);
                    }
                    if (!positive) throw input_error("value " + std::to_string(i) + " of a positive sequence is not positive");
                }
            },
            data_);
    }

    std::variant<Sequence<Rational>, Sequence<double>> data_;
};

/// a^q = (a_n^q). Exact only for exact input and a positive integer q; otherwise the
/// result is approximate, keeping the input tolerance or the default one.
inline PositiveSequence power_seq(const PositiveSequence& a, const Rational& q) {
    if (q.sign() <= 0) throw input_error("exponent must be positive, got " + q.str());
    if (a.exact() && q.is_integer()) {
        const auto e = to_int64(q.numerator());
        std::vector<Rational> v;
        v.reserve(a.size());
        for (const auto& x : a.exact_values()) v.push_back(pow(x, e));
        return PositiveSequence(std::move(v));
    }
    const double qd = q.to_double();
    const double tol = a.exact() ? kDefaultTolerance : a.tolerance();
    std::vector<double> v;
    v.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v.push_back(q == Rational(1) ? a.value(i) : std::pow(a.value(i), qd));
    return PositiveSequence(Sequence<double>(std::move(v), tol));
}

/// Verdict-level view of an order analysis, independent of the element kind.
struct OrderSummary {
    OrderVerdict verdict = OrderVerdict::inconclusive;
    std::optional<std::size_t> order;
    std::size_t orders_excluded = 0;
    bool strict = false;
    Mode mode = Mode::exact;
};

inline OrderSummary analyze_positive(const PositiveSequence& a, OrderOptions opts) {
    return a.visit([&](const auto& s) {
        auto r = analyze_order(s, opts);
        return OrderSummary{r.verdict, r.certified_order, r.orders_excluded, r.strict, r.mode};
    });
}

}  // namespace apseq
