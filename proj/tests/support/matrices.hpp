#pragma once

// Exact matrix families with known structure, for property tests.

#include <cstddef>
#include <vector>

#include "apseq/ringpert/exact_matrix.hpp"
#include "support/random.hpp"

namespace apseq::proptest {

/// Upper shift J on C^d: J e_{i+1} = e_i, J^d = 0, J^{d-1} != 0.
inline ExactMatrix shift(std::size_t d) {
    ExactMatrix j(d);
    for (std::size_t i = 0; i + 1 < d; ++i) j(i, i + 1) = GaussianRational(1);
    return j;
}

/// sum_i coeffs[i] m^i
inline ExactMatrix poly_in(const ExactMatrix& m, const std::vector<GaussianRational>& coeffs) {
    ExactMatrix acc(m.dim());
    ExactMatrix p = ExactMatrix::identity(m.dim());
    for (const auto& c : coeffs) {
        acc += p * c;
        p = p * m;
    }
    return acc;
}

/// (3 + 4i) / 5, a unimodular Gaussian rational.
inline GaussianRational unimodular() { return {Rational(3, 5), Rational(4, 5)}; }

/// Rotation by the angle with cosine 3/5.
inline ExactMatrix rotation() {
    return ExactMatrix{{GaussianRational(Rational(3, 5)), GaussianRational(Rational(4, 5))},
                       {GaussianRational(Rational(-4, 5)), GaussianRational(Rational(3, 5))}};
}

/// Polynomial in J without constant term whose lowest power is J^lowest; its
/// nilpotency index is ceil(d / lowest).
inline ExactMatrix nilpotent_poly(Rng& rng, const ExactMatrix& j, std::size_t lowest) {
    std::vector<GaussianRational> c(j.dim() + 1);
    for (std::size_t i = lowest; i < c.size(); ++i) c[i] = GaussianRational(rng.integer(-3, 3));
    if (lowest < c.size()) c[lowest] = GaussianRational(rng.coin() ? 1 : -2);
    return poly_in(j, c);
}

}  // namespace apseq::proptest
