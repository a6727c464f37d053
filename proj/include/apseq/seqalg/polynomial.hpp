#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apseq/exactnum/combinatorics.hpp"
#include "apseq/exactnum/rational.hpp"

namespace apseq {

/// Dense univariate polynomial over Q, ascending coefficients.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// c z^e
    static Polynomial monomial(Rational c, std::size_t e) {
        std::vector<Rational> v(e + 1);
        v[e] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    const Rational& leading() const {
        if (is_zero()) throw input_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    Rational operator()(const Rational& z) const {
        Rational acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
        return acc;
    }

    Polynomial monic() const {
        if (is_zero()) throw input_error("zero polynomial cannot be made monic");
        Rational inv = Rational(1) / leading();
        std::vector<Rational> v = c_;
        for (auto& x : v) x *= inv;
        return Polynomial(std::move(v));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(v));
    }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Quotient and remainder with deg(remainder) < deg(divisor).
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw input_error("polynomial division by zero");
        Polynomial r = a;
        std::vector<Rational> q(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
        const Rational lead_inv = Rational(1) / b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
            Rational f = r.leading() * lead_inv;
            q[shift] = f;
            r = r - monomial(f, shift) * b;
        }
        return {Polynomial(std::move(q)), r};
    }

    /// "z^4 - 2z^2 + 1" style rendering, highest degree first.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            Rational mag = abs(c_[i]);
            std::string term;
            if (i == 0 || mag != Rational(1)) term = mag.str();
            if (i >= 1) term += "z";
            if (i >= 2) term += "^" + std::to_string(i);
            if (out.empty()) {
                out = (c_[i].sign() < 0 ? "-" : "") + term;
            } else {
                out += (c_[i].sign() < 0 ? " - " : " + ") + term;
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Characteristic polynomial of a recursive equation, optionally known in the
/// factored shape (z^c - 1)^multiplicity.
struct CharPolynomial {
    struct Factored {
        std::int64_t c;
        std::int64_t multiplicity;
        friend bool operator==(const Factored&, const Factored&) = default;
    };

    Polynomial poly;
    std::optional<Factored> factored;

    /// Equality of the dense coefficients; the factored tag is a description only.
    friend bool operator==(const CharPolynomial& a, const CharPolynomial& b) { return a.poly == b.poly; }
};

/// (z^c - 1)^(h+1), whose roots are the c-th roots of unity with multiplicity h+1.
inline CharPolynomial char_poly(std::int64_t c, std::int64_t h) {
    if (c < 1) throw input_error("char_poly requires c >= 1");
    if (h < 0) throw input_error("char_poly requires h >= 0");
    const std::int64_t e = h + 1;
    std::vector<Rational> v(static_cast<std::size_t>(c * e + 1));
    for (std::int64_t j = 0; j <= e; ++j) v[static_cast<std::size_t>(c * j)] = Rational(alternating_sign(e - j) * binomial(e, j));
    return {Polynomial(std::move(v)), CharPolynomial::Factored{c, e}};
}

/// Monic greatest common divisor over Q by the Euclidean algorithm.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    if (a.is_zero() || b.is_zero()) throw input_error("poly_gcd of the zero polynomial");
    while (!b.is_zero()) {
        Polynomial r = Polynomial::divmod(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.monic();
}

inline CharPolynomial poly_gcd(const CharPolynomial& p, const CharPolynomial& q) {
    CharPolynomial g{poly_gcd(p.poly, q.poly), std::nullopt};
    if (p.factored && q.factored) {
        CharPolynomial::Factored f{std::gcd(p.factored->c, q.factored->c),
                                   std::min(p.factored->multiplicity, q.factored->multiplicity)};
        if (g == char_poly(f.c, f.multiplicity - 1)) g.factored = f;
    }
    return g;
}

struct GcdRefinement {
    std::int64_t e;
    std::int64_t ell;
    CharPolynomial certificate;
};

/// Strict orders h of (a_{cn}) and k of (a_{dn}) force strict order min(h, k) on (a_{en}), e = gcd(c, d).
///
/// The returned certificate is gcd((z^c-1)^(h+1), (z^d-1)^(k+1)), checked to equal (z^e-1)^(ell+1).
inline GcdRefinement gcd_refine(std::int64_t c, std::int64_t h, std::int64_t d, std::int64_t k) {
    if (c < 1 || d < 1) throw input_error("gcd_refine requires c, d >= 1");
    if (h < 0 || k < 0) throw input_error("gcd_refine requires h, k >= 0");
    GcdRefinement r{std::gcd(c, d), std::min(h, k), poly_gcd(char_poly(c, h), char_poly(d, k))};
    if (r.certificate != char_poly(r.e, r.ell))
        throw internal_consistency("characteristic polynomial gcd " + r.certificate.poly.str() + " differs from (z^" +
                                   std::to_string(r.e) + " - 1)^" + std::to_string(r.ell + 1));
    r.certificate.factored = CharPolynomial::Factored{r.e, r.ell + 1};
    return r;
}

}  // namespace apseq
