#pragma once

#include <cctype>
#include <cmath>
#include <concepts>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "apseq/exactnum/bigint.hpp"

namespace apseq {

/// Exact rational number, always held in lowest terms with a positive denominator,
/// so two values are equal exactly when their fields are equal.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::integral auto n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInteger n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInteger n, BigInteger d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInteger& numerator() const noexcept { return num_; }
    const BigInteger& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    /// Parses "p", "p/q" or a plain decimal such as "-1.25".
    static Rational parse(std::string_view text);

    /// Exact value of a finite double (every finite double is a dyadic rational).
    static Rational from_double(double x);

    /// Canonical text: "p/q", or "p" when q == 1.
    std::string str() const {
        return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
    }

    double to_double() const;

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
        }
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw input_error("division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInteger lhs = a.num_ * b.den_;
        BigInteger rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_.is_zero()) throw input_error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        BigInteger g = big_gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInteger num_;
    BigInteger den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Integer power; negative exponents invert (zero base rejected).
inline Rational pow(const Rational& base, std::int64_t e) {
    if (e < 0) {
        if (base.is_zero()) throw input_error("zero raised to a negative power");
        return pow(Rational(1) / base, -e);
    }
    Rational result(1);
    Rational b = base;
    while (e > 0) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return result;
}

inline double Rational::to_double() const {
    if (num_.is_zero()) return 0.0;
    // Shift so the quotient keeps 64 significant bits, then rescale.
    const BigInteger an = big_abs(num_);
    const long nbits = static_cast<long>(boost::multiprecision::msb(an)) + 1;
    const long dbits = static_cast<long>(boost::multiprecision::msb(den_)) + 1;
    const long shift = 64 - (nbits - dbits);
    BigInteger q = shift >= 0 ? BigInteger((an << shift) / den_) : BigInteger((an >> -shift) / den_);
    double mant = q.convert_to<double>();
    double v = std::ldexp(mant, static_cast<int>(-shift));
    return num_ < 0 ? -v : v;
}

inline Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw input_error("non-finite value cannot be made exact");
    if (x == 0.0) return Rational();
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
    // 53-bit integer mantissa
    auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    BigInteger n(m);
    if (exp >= 0) return Rational(BigInteger(n << exp));
    BigInteger d = 1;
    d <<= -exp;
    return Rational(n, d);
}

inline Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw input_error("empty rational literal");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInteger n = parse_big_integer(trim(text.substr(0, slash)));
        BigInteger d = parse_big_integer(trim(text.substr(slash + 1)));
        if (d.is_zero()) throw input_error("zero denominator in '" + std::string(text) + "'");
        return Rational(std::move(n), std::move(d));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos)
            throw input_error("invalid decimal literal '" + std::string(text) + "'");
        std::string digits(whole);
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        digits += frac;
        BigInteger n = parse_big_integer(digits);
        BigInteger d = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) d *= 10;
        return Rational(std::move(n), std::move(d));
    }
    return Rational(parse_big_integer(text));
}

}  // namespace apseq

template <>
struct std::hash<apseq::Rational> {
    std::size_t operator()(const apseq::Rational& r) const {
        return std::hash<std::string>{}(r.str());
    }
};
