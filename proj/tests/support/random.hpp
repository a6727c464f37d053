#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "apseq/exactnum/gaussian_rational.hpp"
#include "apseq/exactnum/rational.hpp"

namespace apseq::proptest {

/// Deterministic generator for property tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
    }
    bool coin() { return integer(0, 1) == 1; }

    /// p/q with |p| <= bound, 1 <= q <= bound.
    Rational rational(std::int64_t bound = 50) { return Rational(BigInteger(integer(-bound, bound)), BigInteger(integer(1, bound))); }

    Rational nonzero_rational(std::int64_t bound = 50) {
        for (;;) {
            Rational r = rational(bound);
            if (!r.is_zero()) return r;
        }
    }

    GaussianRational gaussian(std::int64_t bound = 9) { return {rational(bound), rational(bound)}; }

    /// Coefficients gamma_0..gamma_deg with gamma_deg != 0.
    std::vector<Rational> polynomial(std::size_t deg, std::int64_t bound = 20) {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < deg; ++i) c.push_back(rational(bound));
        c.push_back(nonzero_rational(bound));
        return c;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace apseq::proptest
