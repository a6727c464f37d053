#pragma once

#include <cmath>
#include <concepts>
#include <string>

#include "apseq/exactnum/bigint.hpp"
#include "apseq/exactnum/rational.hpp"
#include "apseq/ringpert/exact_matrix.hpp"

namespace apseq {

/// Customization point describing how a commutative-group element kind behaves.
///
/// Every specialization provides:
///   exact, scalar, divisible  compile-time flags
///   kind                      name used in file formats
///   zero_like(x)              additive identity with x's shape
///   is_zero(x)                exact zero test (exact kinds only)
///   magnitude(x)              size used by the approximate zero test
///   same_shape(x, y)
///   scale(x, BigInteger)      integer multiple
///   scale(x, Rational)        rational multiple (divisible kinds)
template <class G>
struct element_traits;

template <>
struct element_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr bool scalar = true;
    static constexpr bool divisible = true;
    static constexpr const char* kind = "rational";

    static Rational zero_like(const Rational&) { return Rational(); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static double magnitude(const Rational& x) { return std::fabs(x.to_double()); }
    static bool same_shape(const Rational&, const Rational&) { return true; }
    static Rational scale(const Rational& x, const BigInteger& c) { return x * Rational(c); }
    static Rational scale(const Rational& x, const Rational& c) { return x * c; }
};

template <>
struct element_traits<double> {
    static constexpr bool exact = false;
    static constexpr bool scalar = true;
    static constexpr bool divisible = true;
    static constexpr const char* kind = "float";

    static double zero_like(const double&) { return 0.0; }
    static bool is_zero(const double& x) { return x == 0.0; }
    static double magnitude(const double& x) { return std::fabs(x); }
    static bool same_shape(const double&, const double&) { return true; }
    static double scale(const double& x, const BigInteger& c) { return x * c.convert_to<double>(); }
    static double scale(const double& x, const Rational& c) { return x * c.to_double(); }
};

template <class S>
struct element_traits<Vec<S>> {
    static constexpr bool exact = true;
    static constexpr bool scalar = false;
    static constexpr bool divisible = true;
    static constexpr const char* kind = "vector";

    static Vec<S> zero_like(const Vec<S>& x) { return Vec<S>(x.dim()); }
    static bool is_zero(const Vec<S>& x) { return x.is_zero(); }
    static double magnitude(const Vec<S>& x) {
        double m = 0.0;
        for (const auto& v : x.data()) m = std::max(m, scalar_abs(v));
        return m;
    }
    static bool same_shape(const Vec<S>& x, const Vec<S>& y) { return x.dim() == y.dim(); }
    static Vec<S> scale(const Vec<S>& x, const BigInteger& c) { return x * S(Rational(c)); }
    static Vec<S> scale(const Vec<S>& x, const Rational& c) { return x * S(c); }
};

template <class S>
struct element_traits<Matrix<S>> {
    static constexpr bool exact = true;
    static constexpr bool scalar = false;
    static constexpr bool divisible = true;
    static constexpr const char* kind = "matrix";

    static Matrix<S> zero_like(const Matrix<S>& x) { return Matrix<S>(x.dim()); }
    static bool is_zero(const Matrix<S>& x) { return x.is_zero(); }
    static double magnitude(const Matrix<S>& x) { return x.max_abs(); }
    static bool same_shape(const Matrix<S>& x, const Matrix<S>& y) { return x.dim() == y.dim(); }
    static Matrix<S> scale(const Matrix<S>& x, const BigInteger& c) { return x * S(Rational(c)); }
    static Matrix<S> scale(const Matrix<S>& x, const Rational& c) { return x * S(c); }
};

/// Element of a commutative group the difference calculus can run on.
template <class G>
concept GroupElement = requires(const G& a, const G& b, const BigInteger& n) {
    { a + b } -> std::convertible_to<G>;
    { a - b } -> std::convertible_to<G>;
    { -a } -> std::convertible_to<G>;
    { element_traits<G>::zero_like(a) } -> std::convertible_to<G>;
    { element_traits<G>::is_zero(a) } -> std::convertible_to<bool>;
    { element_traits<G>::magnitude(a) } -> std::convertible_to<double>;
    { element_traits<G>::scale(a, n) } -> std::convertible_to<G>;
    { element_traits<G>::exact } -> std::convertible_to<bool>;
};

template <class G>
concept DivisibleElement = GroupElement<G> && element_traits<G>::divisible &&
                           requires(const G& a, const Rational& r) {
                               { element_traits<G>::scale(a, r) } -> std::convertible_to<G>;
                           };

}  // namespace apseq
