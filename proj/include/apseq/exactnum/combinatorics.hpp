#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "apseq/exactnum/bigint.hpp"
#include "apseq/exactnum/rational.hpp"

namespace apseq {

/// Triangular cache of binomial coefficients C(n, k) for n <= bound.
///
/// Rows are appended lazily by Pascal's rule. Instances are not shared between
/// threads; the free function binomial() uses one cache per thread.
class BinomialTable {
public:
    explicit BinomialTable(std::int64_t bound = 256) : bound_(bound) { rows_.push_back({BigInteger(1)}); }

    std::int64_t bound() const noexcept { return bound_; }

    BigInteger get(std::int64_t n, std::int64_t k) {
        if (n < 0 || k < 0) throw input_error("binomial arguments must be non-negative");
        if (k > n) return BigInteger(0);
        if (n > bound_) return direct(n, k);
        while (static_cast<std::int64_t>(rows_.size()) <= n) {
            const auto& prev = rows_.back();
            std::vector<BigInteger> row(prev.size() + 1);
            row.front() = 1;
            row.back() = 1;
            for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
            rows_.push_back(std::move(row));
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    /// Multiplicative formula, used beyond the cache bound.
    static BigInteger direct(std::int64_t n, std::int64_t k) {
        if (k > n - k) k = n - k;
        BigInteger r = 1;
        for (std::int64_t i = 1; i <= k; ++i) {
            r *= n - k + i;
            r /= i;
        }
        return r;
    }

private:
    std::int64_t bound_;
    std::vector<std::vector<BigInteger>> rows_;
};

inline BinomialTable& thread_binomial_table() {
    thread_local BinomialTable table;
    return table;
}

/// C(n, k) for n, k >= 0, with C(n, k) = 0 when k > n.
inline BigInteger binomial(std::int64_t n, std::int64_t k) { return thread_binomial_table().get(n, k); }

/// Binomial with an arbitrary integer top: t(t-1)...(t-k+1)/k!.
inline BigInteger generalized_binomial(std::int64_t top, std::int64_t k) {
    if (k < 0) throw input_error("binomial lower argument must be non-negative");
    if (top >= 0) return binomial(top, k);
    // C(-u, k) = (-1)^k C(u + k - 1, k)
    BigInteger r = binomial(-top + k - 1, k);
    return (k % 2 == 0) ? r : BigInteger(-r);
}

/// (-1)^e as an integer.
inline int alternating_sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

/// Weight of a_k in the Lagrange form of an order-h progression evaluated at n:
/// (-1)^(h-k) n(n-1)...(n-h) / (k!(h-k)!), with the factor (n-k) left out.
inline Rational lagrange_weight(std::int64_t n, std::int64_t k, std::int64_t h) {
    if (k < 0 || h < 0) throw input_error("lagrange_weight requires k, h >= 0");
    if (k > h) throw input_error("lagrange_weight requires k <= h");
    BigInteger skipped = 1;
    for (std::int64_t i = 0; i <= h; ++i) {
        if (i != k) skipped *= BigInteger(n - i);
    }
    Rational w(skipped, factorial(k) * factorial(h - k));
    return alternating_sign(h - k) > 0 ? w : -w;
}

/// Signed Stirling numbers of the first kind s(k, j) for 0 <= j <= k <= max_k:
/// the falling factorial n(n-1)...(n-k+1) equals sum_j s(k, j) n^j.
inline std::vector<std::vector<BigInteger>> stirling_first_kind(std::size_t max_k) {
    std::vector<std::vector<BigInteger>> s(max_k + 1);
    s[0] = {BigInteger(1)};
    for (std::size_t k = 1; k <= max_k; ++k) {
        s[k].assign(k + 1, BigInteger(0));
        for (std::size_t j = 1; j <= k; ++j) {
            // s(k, j) = s(k-1, j-1) - (k-1) s(k-1, j)
            BigInteger v = s[k - 1][j - 1];
            if (j <= k - 1) v -= BigInteger(k - 1) * s[k - 1][j];
            s[k][j] = std::move(v);
        }
    }
    return s;
}

// Identity cases that back the interpolation formulas.

/// sum_{t=0}^{j} (-1)^t C(i, t) = (-1)^j C(i-1, j), for 0 <= j < i.
struct AlternatingPartialSum {
    std::int64_t i;
    std::int64_t j;
};

/// sum_{j=k}^{h} (-1)^(j-k) C(n, j) C(j, k) = lagrange_weight(n, k, h), for 0 <= k <= h < n.
struct SkippedSum {
    std::int64_t n;
    std::int64_t h;
    std::int64_t k;
};

/// sum_{k=0}^{h} lagrange_weight(n, k, h) = 1, for n, h >= 0.
struct UnitySum {
    std::int64_t n;
    std::int64_t h;
};

using IdentityCase = std::variant<AlternatingPartialSum, SkippedSum, UnitySum>;

inline bool verify_identity(const AlternatingPartialSum& c) {
    if (!(0 <= c.j && c.j < c.i)) throw input_error("alternating_partial_sum requires 0 <= j < i");
    BigInteger lhs = 0;
    for (std::int64_t t = 0; t <= c.j; ++t) lhs += alternating_sign(t) * binomial(c.i, t);
    BigInteger rhs = alternating_sign(c.j) * binomial(c.i - 1, c.j);
    return lhs == rhs;
}

inline bool verify_identity(const SkippedSum& c) {
    if (!(0 <= c.k && c.k <= c.h && c.h < c.n)) throw input_error("skipped_sum requires 0 <= k <= h < n");
    BigInteger lhs = 0;
    for (std::int64_t j = c.k; j <= c.h; ++j) lhs += alternating_sign(j - c.k) * binomial(c.n, j) * binomial(j, c.k);
    return Rational(lhs) == lagrange_weight(c.n, c.k, c.h);
}

inline bool verify_identity(const UnitySum& c) {
    if (c.n < 0 || c.h < 0) throw input_error("unity_sum requires n, h >= 0");
    Rational sum;
    for (std::int64_t k = 0; k <= c.h; ++k) sum += lagrange_weight(c.n, k, c.h);
    return sum == Rational(1);
}

inline bool verify_identity(const IdentityCase& c) {
    return std::visit([](const auto& x) { return verify_identity(x); }, c);
}

inline std::string identity_name(const IdentityCase& c) {
    switch (c.index()) {
        case 0: return "alternating_partial_sum";
        case 1: return "skipped_sum";
        default: return "unity_sum";
    }
}

}  // namespace apseq
