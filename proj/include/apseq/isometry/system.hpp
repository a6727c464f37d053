#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "apseq/diffcalc/sequence.hpp"
#include "apseq/isometry/metric.hpp"
#include "apseq/ringpert/exact_matrix.hpp"

namespace apseq {

/// d^q, exact when it is rational.
struct DistancePower {
    std::optional<Rational> exact;
    double approx = 0.0;
};

namespace detail {

inline std::optional<std::int64_t> positive_integer(const Rational& q) {
    if (!q.is_integer() || q.sign() <= 0) return std::nullopt;
    return to_int64(q.numerator());
}

inline DistancePower rational_power(const Rational& d, const Rational& q) {
    DistancePower out;
    out.approx = std::pow(d.to_double(), q.to_double());
    if (auto e = positive_integer(q)) out.exact = pow(d, *e);
    return out;
}

}  // namespace detail

/// Self-map of a finite metric space, given by its table.
struct FiniteSystem {
    using point_type = std::size_t;

    FiniteMetricSpace space;
    std::vector<std::size_t> map;

    FiniteSystem(FiniteMetricSpace s, std::vector<std::size_t> m) : space(std::move(s)), map(std::move(m)) {
        validate_metric(space);
        if (map.size() != space.size()) throw input_error("map must send each of the " + std::to_string(space.size()) + " points");
        for (auto v : map)
            if (v >= space.size()) throw input_error("map value " + std::to_string(v) + " is not a point");
    }

    point_type apply(point_type x) const { return map[x]; }
    DistancePower distance_power(point_type x, point_type y, const Rational& q) const { return detail::rational_power(space(x, y), q); }

    /// this o other
    FiniteSystem compose(const FiniteSystem& other) const {
        if (other.space != space) throw input_error("maps act on different metric spaces");
        std::vector<std::size_t> m(map.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = map[other.map[i]];
        return {space, std::move(m)};
    }
    FiniteSystem power(std::int64_t k) const {
        if (k < 0) throw input_error("negative power of a map");
        std::vector<std::size_t> id(map.size());
        for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
        FiniteSystem r{space, std::move(id)};
        for (std::int64_t i = 0; i < k; ++i) r = compose(r);
        return r;
    }
    bool commutes_with(const FiniteSystem& other) const { return compose(other).map == other.compose(*this).map; }
    bool finite() const noexcept { return true; }

    /// Every ordered pair of points.
    std::vector<std::pair<point_type, point_type>> sample_pairs() const {
        std::vector<std::pair<point_type, point_type>> pairs;
        for (std::size_t x = 0; x < space.size(); ++x)
            for (std::size_t y = 0; y < space.size(); ++y) pairs.emplace_back(x, y);
        return pairs;
    }
    static std::string describe(point_type x) { return std::to_string(x); }
};

/// lp norm with p >= 1 or p = infinity.
struct NormSpec {
    bool infinity = false;
    Rational p = Rational(2);

    static NormSpec lp(const Rational& p) {
        if (p < Rational(1)) throw input_error("norm exponent p must be at least 1, got " + p.str());
        return {false, p};
    }
    static NormSpec l1() { return lp(Rational(1)); }
    static NormSpec l2() { return lp(Rational(2)); }
    static NormSpec linf() { return {true, Rational(0)}; }

    std::string str() const { return infinity ? "inf" : p.str(); }
    static NormSpec parse(const std::string& text) {
        if (text == "inf" || text == "infinity") return linf();
        return lp(Rational::parse(text));
    }
    friend bool operator==(const NormSpec&, const NormSpec&) = default;

    /// ||v||^q; exact for p = 2 with even q, or p in {1, inf} on real vectors with integer q.
    DistancePower power(const ComplexVector& v, const Rational& q) const {
        DistancePower out;
        const auto qi = detail::positive_integer(q);
        bool real = true;
        for (const auto& x : v.data()) real = real && x.is_real();
        if (!infinity && p == Rational(2)) {
            const Rational sq = norm_squared(v);
            out.approx = std::pow(sq.to_double(), q.to_double() / 2.0);
            if (qi && *qi % 2 == 0) out.exact = pow(sq, *qi / 2);
            return out;
        }
        if (infinity || p == Rational(1)) {
            double n = 0.0;
            for (const auto& x : v.data()) n = infinity ? std::max(n, scalar_abs(x)) : n + scalar_abs(x);
            out.approx = std::pow(n, q.to_double());
            if (real && qi) {
                Rational e;
                for (const auto& x : v.data()) {
                    Rational a = abs(x.re());
                    e = infinity ? (a > e ? a : e) : e + a;
                }
                out.exact = pow(e, *qi);
            }
            return out;
        }
        const double pd = p.to_double();
        double s = 0.0;
        for (const auto& x : v.data()) s += std::pow(scalar_abs(x), pd);
        out.approx = std::pow(s, q.to_double() / pd);
        return out;
    }
};

/// Pairs sampled in a normed space: (0, e_i), (e_i, e_j) for i < j, then random
/// rational pairs from a fixed seed.
struct PairSampling {
    std::size_t random_pairs = 32;
    std::uint64_t seed = 20130101;
};

/// Linear map on C^n with an lp norm; d(x, y) = ||x - y||.
struct NormedSystem {
    using point_type = ComplexVector;

    ExactMatrix matrix;
    NormSpec norm;
    PairSampling sampling;

    point_type apply(const point_type& x) const { return matrix * x; }
    DistancePower distance_power(const point_type& x, const point_type& y, const Rational& q) const {
        return norm.power(x - y, q);
    }

    NormedSystem compose(const NormedSystem& other) const {
        check_same(other);
        return {matrix * other.matrix, norm, sampling};
    }
    NormedSystem power(std::int64_t k) const { return {apseq::pow(matrix, k), norm, sampling}; }
    bool commutes_with(const NormedSystem& other) const {
        check_same(other);
        return commute(matrix, other.matrix);
    }
    bool finite() const noexcept { return false; }

    std::vector<std::pair<point_type, point_type>> sample_pairs() const {
        const std::size_t n = matrix.dim();
        std::vector<std::pair<point_type, point_type>> pairs;
        for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(ComplexVector(n), ComplexVector::basis(n, i));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(ComplexVector::basis(n, i), ComplexVector::basis(n, j));
        std::mt19937_64 rng(sampling.seed);
        std::uniform_int_distribution<std::int64_t> num(-9, 9), den(1, 9);
        auto vec = [&] {
            ComplexVector v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = GaussianRational(Rational(BigInteger(num(rng)), BigInteger(den(rng))));
            return v;
        };
        for (std::size_t r = 0; r < sampling.random_pairs; ++r) {
            auto x = vec();
            pairs.emplace_back(std::move(x), vec());
        }
        return pairs;
    }
    static std::string describe(const point_type& x) {
        std::string s = "(";
        for (std::size_t i = 0; i < x.dim(); ++i) s += (i ? ", " : "") + x[i].str();
        return s + ")";
    }

private:
    void check_same(const NormedSystem& other) const {
        if (other.matrix.dim() != matrix.dim() || !(other.norm == norm)) throw input_error("maps act on different normed spaces");
    }
};

template <class S>
concept MetricSystem = requires(const S& s, const typename S::point_type& x, const Rational& q, std::int64_t k) {
    { s.apply(x) } -> std::convertible_to<typename S::point_type>;
    { s.distance_power(x, x, q) } -> std::convertible_to<DistancePower>;
    { s.compose(s) } -> std::convertible_to<S>;
    { s.power(k) } -> std::convertible_to<S>;
    { s.commutes_with(s) } -> std::convertible_to<bool>;
    { s.finite() } -> std::convertible_to<bool>;
    { s.sample_pairs() };
    { S::describe(x) } -> std::convertible_to<std::string>;
};

/// Exact trace when every term is rational, otherwise floating point.
using Trace = std::variant<Sequence<Rational>, Sequence<double>>;

/// Collects d^q values and settles the trace mode at the end.
class TraceBuilder {
public:
    void push(const DistancePower& v) {
        if (!v.exact) all_exact_ = false;
        if (all_exact_) exact_.push_back(*v.exact);
        approx_.push_back(v.approx);
    }
    Trace finish(double tolerance) const {
        if (all_exact_) return Sequence<Rational>(exact_);
        return Sequence<double>(approx_, tolerance);
    }

private:
    bool all_exact_ = true;
    std::vector<Rational> exact_;
    std::vector<double> approx_;
};

inline std::size_t trace_size(const Trace& t) {
    return std::visit([](const auto& s) { return s.size(); }, t);
}
inline Mode trace_mode(const Trace& t) { return std::holds_alternative<Sequence<Rational>>(t) ? Mode::exact : Mode::approximate; }
inline double trace_value(const Trace& t, std::size_t i) {
    if (auto e = std::get_if<Sequence<Rational>>(&t)) return (*e)[i].to_double();
    return std::get<Sequence<double>>(t)[i];
}

/// (d(T^n x, T^n y)^q)_{n < horizon}; terms are zero when the orbits meet.
template <MetricSystem S>
Trace pair_trace(const S& sys, typename S::point_type x, typename S::point_type y, const Rational& q, std::size_t horizon,
                 double tolerance = kDefaultTolerance) {
    if (horizon < 2) throw insufficient_data("pair trace needs a horizon of at least 2");
    if (q.sign() <= 0) throw input_error("exponent q must be positive, got " + q.str());
    TraceBuilder b;
    for (std::size_t n = 0; n < horizon; ++n) {
        b.push(sys.distance_power(x, y, q));
        if (n + 1 < horizon) {
            x = sys.apply(x);
            y = sys.apply(y);
        }
    }
    return b.finish(tolerance);
}

}  // namespace apseq
