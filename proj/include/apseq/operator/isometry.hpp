#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "apseq/exactnum/combinatorics.hpp"
#include "apseq/ringpert/exact_matrix.hpp"

namespace apseq {

/// Outcome of an m-isometry or left n-inverse test.
enum class StrictStatus { no, non_strict, strict };

inline const char* to_string(StrictStatus s) {
    switch (s) {
        case StrictStatus::no: return "no";
        case StrictStatus::non_strict: return "non_strict";
        default: return "strict";
    }
}

/// sum_{i=0}^{j} (-1)^{j-i} C(j, i) S^i T^i
inline ExactMatrix beta_pair(const ExactMatrix& s, const ExactMatrix& t, std::int64_t j) {
    if (s.dim() != t.dim()) throw input_error("S and T must have the same dimension");
    if (j < 0) throw input_error("beta index must be non-negative");
    ExactMatrix acc(t.dim());
    ExactMatrix si = ExactMatrix::identity(t.dim());
    ExactMatrix ti = ExactMatrix::identity(t.dim());
    for (std::int64_t i = 0; i <= j; ++i) {
        acc += si * ti * GaussianRational(Rational(alternating_sign(j - i) * binomial(j, i)));
        si = si * s;
        ti = ti * t;
    }
    return acc;
}

/// sum_{i=0}^{j} (-1)^{j-i} C(j, i) T*^i T^i; self-adjoint.
inline ExactMatrix beta(const ExactMatrix& t, std::int64_t j) { return beta_pair(t.adjoint(), t, j); }

/// sum_{k=0}^{m} (-1)^{m-k} C(m, k) T*^k T^k; zero iff T is an m-isometry.
inline ExactMatrix defect(const ExactMatrix& t, std::int64_t m) { return beta(t, m); }

/// sum_{k=0}^{m} (-1)^{m-k} C(m, k) ||T^k x||^2
inline Rational quadratic_defect(const ExactMatrix& t, std::int64_t m, const ComplexVector& x) {
    Rational acc;
    ComplexVector tx = x;
    for (std::int64_t k = 0; k <= m; ++k) {
        acc += Rational(alternating_sign(m - k) * binomial(m, k)) * norm_squared(tx);
        tx = t * tx;
    }
    return acc;
}

/// e_i, e_i + e_j and e_i + i e_j; the quadratic form of a self-adjoint matrix on
/// these vectors determines the matrix.
inline std::vector<ComplexVector> polarization_probes(std::size_t dim) {
    std::vector<ComplexVector> probes;
    for (std::size_t i = 0; i < dim; ++i) probes.push_back(ComplexVector::basis(dim, i));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            probes.push_back(ComplexVector::basis(dim, i) + ComplexVector::basis(dim, j));
            probes.push_back(ComplexVector::basis(dim, i) + ComplexVector::basis(dim, j) * GaussianRational(0, 1));
        }
    return probes;
}

/// The per-vector forms agree with the operator form on every probe: when
/// defect(T, m) = 0, the quadratic, vector and inner-product sums all vanish;
/// otherwise some probe has a nonzero quadratic sum.
inline bool isometry_forms_agree(const ExactMatrix& t, std::int64_t m, const std::vector<ComplexVector>& probes) {
    const ExactMatrix d = defect(t, m);
    if (d.is_zero()) {
        for (const auto& x : probes) {
            if (!quadratic_defect(t, m, x).is_zero()) return false;
            ComplexVector v(t.dim());
            ComplexVector tx = x;
            ExactMatrix tsk = ExactMatrix::identity(t.dim());
            for (std::int64_t k = 0; k <= m; ++k) {
                v += tsk * tx * GaussianRational(Rational(alternating_sign(m - k) * binomial(m, k)));
                tx = t * tx;
                tsk = tsk * t.adjoint();
            }
            if (!v.is_zero()) return false;
            for (const auto& y : probes)
                if (!inner(v, y).is_zero()) return false;
        }
        return true;
    }
    for (const auto& x : probes)
        if (!quadratic_defect(t, m, x).is_zero()) return true;
    return false;
}

/// no when defect(T, m) != 0; strict when additionally beta_{m-1}(T) != 0.
///
/// The vector and quadratic characterizations are cross-checked on the
/// polarization probes.
inline StrictStatus is_m_isometry(const ExactMatrix& t, std::int64_t m) {
    if (m < 1) throw input_error("m must be at least 1");
    if (!isometry_forms_agree(t, m, polarization_probes(t.dim())))
        throw internal_consistency("operator and vector forms of the m-isometry condition disagree");
    if (!defect(t, m).is_zero()) return StrictStatus::no;
    return beta(t, m - 1).is_zero() ? StrictStatus::non_strict : StrictStatus::strict;
}

/// Smallest m <= max_m with defect(T, m) = 0.
inline std::optional<std::int64_t> isometry_order(const ExactMatrix& t, std::int64_t max_m) {
    for (std::int64_t m = 1; m <= max_m; ++m)
        if (defect(t, m).is_zero()) return m;
    return std::nullopt;
}

/// no when beta_n(S, T) != 0; strict when additionally beta_{n-1}(S, T) != 0.
inline StrictStatus left_n_inverse_check(const ExactMatrix& s, const ExactMatrix& t, std::int64_t n) {
    if (n < 1) throw input_error("n must be at least 1");
    if (!beta_pair(s, t, n).is_zero()) return StrictStatus::no;
    return beta_pair(s, t, n - 1).is_zero() ? StrictStatus::non_strict : StrictStatus::strict;
}

/// Smallest n <= max_n with beta_n(S, T) = 0.
inline std::optional<std::int64_t> inverse_order(const ExactMatrix& s, const ExactMatrix& t, std::int64_t max_n) {
    for (std::int64_t n = 1; n <= max_n; ++n)
        if (beta_pair(s, t, n).is_zero()) return n;
    return std::nullopt;
}

}  // namespace apseq
