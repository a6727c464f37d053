#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "apseq/diffcalc/element.hpp"

namespace apseq {

/// Customization point for a unital ring on top of element_traits.
///
/// Every specialization provides:
///   one_like(x)            multiplicative identity with x's shape
///   nilpotency_bound(x)    n such that a nilpotent with x's shape has a^n = 0
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational one_like(const Rational&) { return Rational(1); }
    static std::size_t nilpotency_bound(const Rational&) { return 1; }
};

template <class S>
struct ring_traits<Matrix<S>> {
    static Matrix<S> one_like(const Matrix<S>& x) { return Matrix<S>::identity(x.dim()); }
    static std::size_t nilpotency_bound(const Matrix<S>& x) { return x.dim(); }
};

/// Exact unital ring element with rational scaling.
template <class R>
concept RingElement = DivisibleElement<R> && element_traits<R>::exact && requires(const R& a, const R& b) {
    { a * b } -> std::convertible_to<R>;
    { ring_traits<R>::one_like(a) } -> std::convertible_to<R>;
    { ring_traits<R>::nilpotency_bound(a) } -> std::convertible_to<std::size_t>;
};

/// x^e for e >= 0; x^0 is the identity.
template <RingElement R>
R ring_pow(const R& x, std::int64_t e) {
    if (e < 0) throw precondition_failure("negative power in a ring");
    R result = ring_traits<R>::one_like(x);
    R base = x;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

template <RingElement R>
bool ring_commute(const R& a, const R& b) {
    return a * b == b * a;
}

}  // namespace apseq
