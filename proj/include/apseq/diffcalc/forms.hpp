#pragma once

#include <cstdint>

#include "apseq/diffcalc/order.hpp"
#include "apseq/exactnum/combinatorics.hpp"

namespace apseq {

enum class TermForm { newton, lagrange, barycentric };

inline const char* to_string(TermForm f) {
    switch (f) {
        case TermForm::newton: return "newton";
        case TermForm::lagrange: return "lagrange";
        default: return "barycentric";
    }
}

/// sum_{k<=h} C(n, k) D^k a_0
template <GroupElement G>
G newton_term(const OrderReport<G>& report, std::int64_t n) {
    return newton_value(report.newton_coeffs, n);
}

/// sum_{k<=h} lagrange_weight(n, k, h) a_k
template <DivisibleElement G>
G lagrange_term(const OrderReport<G>& report, std::int64_t n) {
    const auto h = static_cast<std::int64_t>(report.order());
    G acc = element_traits<G>::zero_like(report.nodes.front());
    for (std::int64_t k = 0; k <= h; ++k)
        acc = acc + element_traits<G>::scale(report.nodes[static_cast<std::size_t>(k)], lagrange_weight(n, k, h));
    return acc;
}

/// Quotient of sum w_k a_k / (n-k) by sum w_k / (n-k) with w_k = (-1)^(h-k) C(h, k).
/// At the nodes n = 0..h the quotient is undefined and the node value is returned.
template <DivisibleElement G>
G barycentric_term(const OrderReport<G>& report, std::int64_t n) {
    const auto h = static_cast<std::int64_t>(report.order());
    if (n >= 0 && n <= h) return report.nodes[static_cast<std::size_t>(n)];
    G numerator = element_traits<G>::zero_like(report.nodes.front());
    Rational denominator;
    for (std::int64_t k = 0; k <= h; ++k) {
        Rational w(BigInteger(alternating_sign(h - k) * binomial(h, k)), BigInteger(n - k));
        numerator = numerator + element_traits<G>::scale(report.nodes[static_cast<std::size_t>(k)], w);
        denominator += w;
    }
    return element_traits<G>::scale(numerator, Rational(1) / denominator);
}

/// Value of the certified progression at index n in the requested representation.
template <GroupElement G>
G term_value(const OrderReport<G>& report, std::int64_t n, TermForm form) {
    if (!report.certified()) throw precondition_failure("term_value needs a certified order");
    if (n < 0) throw input_error("term index must be non-negative");
    switch (form) {
        case TermForm::newton: return newton_term(report, n);
        case TermForm::lagrange:
            if constexpr (DivisibleElement<G>) {
                return lagrange_term(report, n);
            } else {
                throw unsupported_form("Lagrange form needs a divisible group");
            }
        case TermForm::barycentric:
            if constexpr (DivisibleElement<G> && element_traits<G>::scalar) {
                return barycentric_term(report, n);
            } else {
                throw unsupported_form("barycentric form is defined for scalar sequences only");
            }
    }
    throw input_error("unknown term form");
}

}  // namespace apseq
