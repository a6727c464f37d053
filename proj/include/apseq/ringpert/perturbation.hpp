#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "apseq/diffcalc/order.hpp"
#include "apseq/ringpert/nilpotent.hpp"

namespace apseq {

/// (y^0 x^0, y^1 x^1, ..., y^{N-1} x^{N-1})
template <RingElement R>
Sequence<R> power_product_seq(const R& y, const R& x, std::size_t horizon) {
    if (!element_traits<R>::same_shape(x, y)) throw input_error("y and x must have the same dimension");
    if (horizon == 0) throw insufficient_data("horizon must be at least 1");
    std::vector<R> terms;
    terms.reserve(horizon);
    R yk = ring_traits<R>::one_like(y);
    R xk = ring_traits<R>::one_like(x);
    for (std::size_t k = 0; k < horizon; ++k) {
        terms.push_back(yk * xk);
        yk = yk * y;
        xk = xk * x;
    }
    return Sequence<R>(std::move(terms));
}

/// Leading monomial coefficient c_h = D^h a_0 / h! of a strict report.
template <RingElement R>
R extract_c_h(const OrderReport<R>& report) {
    if (!report.certified() || !report.strict) throw precondition_failure("c_h needs a report certifying a strict order");
    const std::size_t h = report.order();
    return element_traits<R>::scale(report.leading(), Rational(BigInteger(1), factorial(static_cast<std::int64_t>(h))));
}

struct RingPerturbationOptions {
    /// Largest order tried for (y^k x^k) before it counts as not an AP.
    std::size_t base_max_order = std::numeric_limits<std::size_t>::max();
    std::size_t min_windows = 1;
};

/// Outcome of checking ((y+b)^k (x+a)^k) against the perturbation bound.
///
/// order_bound = n + m + h - 2. The perturbed monomial coefficient of k^order_bound
/// equals certificate / ((m-1)! (n-1)!), so strict order order_bound is attained
/// exactly when the certificate is nonzero.
template <RingElement R>
struct RingPerturbationReport {
    std::size_t n = 1;
    std::size_t m = 1;
    std::size_t h = 0;
    std::size_t order_bound = 0;
    R c_h;
    /// b^{m-1} y^{n-m} c_h a^{n-1} when m <= n, b^{m-1} c_h x^{m-n} a^{n-1} when m > n.
    R certificate;
    std::string certificate_form;
    bool certificate_nonzero = false;
    /// a^{n-1} c_h x^{n-1}, the single-factor variant.
    R corollary_certificate;
    bool corollary_nonzero = false;
    /// y is the identity and b = 0.
    bool corollary_setting = false;
    OrderReport<R> base;
    OrderReport<R> perturbed;
    bool strict_attained = false;
};

/// Checks every hypothesis, then certifies the perturbed order bound and the
/// strictness certificate on the horizon.
///
/// Throws hypothesis_violation listing every failed hypothesis, and inconclusive
/// when the horizon cannot decide the base order or is shorter than
/// n + m + h + min_windows.
template <RingElement R>
RingPerturbationReport<R> verify_ring_perturbation(const R& y, const R& x, const R& a, const R& b, std::size_t horizon,
                                                   RingPerturbationOptions opts = {}) {
    if (!element_traits<R>::same_shape(y, x) || !element_traits<R>::same_shape(x, a) || !element_traits<R>::same_shape(a, b))
        throw input_error("y, x, a, b must have the same dimension");
    if (opts.min_windows < 1) throw input_error("min_windows must be at least 1");

    std::vector<std::string> failed;
    if (!ring_commute(a, x)) failed.push_back("a does not commute with x");
    if (!ring_commute(b, y)) failed.push_back("b does not commute with y");
    const auto na = nilpotency_index(a);
    const auto nb = nilpotency_index(b);
    if (!na) failed.push_back("a is not nilpotent");
    if (!nb) failed.push_back("b is not nilpotent");

    RingPerturbationReport<R> out;
    out.base = analyze_order(power_product_seq(y, x, horizon), OrderOptions{opts.base_max_order, opts.min_windows});
    if (out.base.verdict == OrderVerdict::not_an_ap) {
        failed.push_back("(y^k x^k) is not an arithmetic progression of order <= " + std::to_string(out.base.max_order));
    } else if (out.base.certified() && !out.base.strict) {
        failed.push_back("(y^k x^k) has no strict order");
    }
    if (!failed.empty()) {
        std::string what = "ring perturbation hypotheses fail:";
        for (const auto& f : failed) what += " " + f + ";";
        throw hypothesis_violation(std::move(failed), what);
    }
    if (!out.base.certified())
        throw inconclusive("horizon of " + std::to_string(horizon) + " terms cannot decide the order of (y^k x^k)");

    out.n = na->index;
    out.m = nb->index;
    out.h = out.base.order();
    out.order_bound = out.n + out.m + out.h - 2;
    const std::size_t needed = out.n + out.m + out.h + opts.min_windows;
    if (horizon < needed)
        throw inconclusive("horizon of " + std::to_string(horizon) + " terms is below n + m + h + min_windows = " +
                           std::to_string(needed));

    const auto n = static_cast<std::int64_t>(out.n);
    const auto m = static_cast<std::int64_t>(out.m);
    out.c_h = extract_c_h(out.base);
    const R a_top = ring_pow(a, n - 1);
    const R b_top = ring_pow(b, m - 1);
    if (m <= n) {
        out.certificate = b_top * ring_pow(y, n - m) * out.c_h * a_top;
        out.certificate_form = "b^{m-1} y^{n-m} c_h a^{n-1}";
    } else {
        out.certificate = b_top * out.c_h * ring_pow(x, m - n) * a_top;
        out.certificate_form = "b^{m-1} c_h x^{m-n} a^{n-1}";
    }
    out.certificate_nonzero = !element_traits<R>::is_zero(out.certificate);
    out.corollary_certificate = a_top * out.c_h * ring_pow(x, n - 1);
    out.corollary_nonzero = !element_traits<R>::is_zero(out.corollary_certificate);
    out.corollary_setting = element_traits<R>::is_zero(b) && y == ring_traits<R>::one_like(y);

    out.perturbed =
        analyze_order(power_product_seq(R(y + b), R(x + a), horizon), OrderOptions{out.order_bound, opts.min_windows});
    if (!out.perturbed.certified())
        throw internal_consistency("perturbed sequence is not an AP of order <= " + std::to_string(out.order_bound));

    const std::size_t order = out.perturbed.order();
    const R observed = order == out.order_bound ? out.perturbed.monomial->coefficients[order]
                                                : element_traits<R>::zero_like(out.certificate);
    const R predicted = element_traits<R>::scale(
        out.certificate, Rational(BigInteger(1), factorial(m - 1) * factorial(n - 1)));
    if (observed != predicted)
        throw internal_consistency("coefficient of k^" + std::to_string(out.order_bound) +
                                   " disagrees with the strictness certificate");
    out.strict_attained = order == out.order_bound && out.perturbed.strict;
    return out;
}

}  // namespace apseq
