#include <gtest/gtest.h>

#include <numeric>

#include "apseq/diffcalc.hpp"
#include "apseq/seqalg.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace apseq;

namespace {

Sequence<Rational> rats(std::initializer_list<std::int64_t> xs) {
    std::vector<Rational> v;
    for (auto x : xs) v.emplace_back(x);
    return Sequence<Rational>(std::move(v));
}

Sequence<Rational> sample_poly(const std::vector<Rational>& coeffs, std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(oracle::eval_poly(coeffs, Rational(static_cast<std::int64_t>(i))));
    return Sequence<Rational>(std::move(v));
}

std::size_t strict_order(const Sequence<Rational>& s) {
    auto r = certified_order(s, s.size());
    EXPECT_TRUE(r.strict);
    return r.order();
}

Polynomial zpoly(std::initializer_list<std::int64_t> xs) {
    std::vector<Rational> v;
    for (auto x : xs) v.emplace_back(x);
    return Polynomial(std::move(v));
}

}  // namespace

TEST(Shift, WorkedExamples) {
    auto s = shift(rats({2, 1, 2, 5, 10}), 1);
    EXPECT_EQ(s, rats({1, 2, 5, 10}));
    EXPECT_EQ(strict_order(s), 2u);
    EXPECT_EQ(shift(rats({3, 3, 3, 3}), 2), rats({3, 3}));
    auto sq = shift(rats({0, 1, 4, 9, 16}), 2);
    EXPECT_EQ(sq, rats({4, 9, 16}));
    // Three terms refute orders 0 and 1 but leave no window to certify order 2.
    auto r = analyze_order(sq);
    EXPECT_EQ(r.orders_excluded, 2u);
    EXPECT_EQ(r.verdict, OrderVerdict::inconclusive);
    EXPECT_EQ(strict_order(shift(sample_poly({0, 0, 1}, 8), 2)), 2u);
    EXPECT_THROW(shift(rats({1, 2}), 2), insufficient_data);
    EXPECT_THROW(shift(rats({1, 2}), 0), input_error);
}

TEST(PrefixSums, WorkedExamples) {
    EXPECT_EQ(prefix_sums(rats({1, 1, 1, 1})), rats({1, 2, 3, 4}));
    EXPECT_EQ(strict_order(prefix_sums(rats({1, 1, 1, 1}))), 1u);
    EXPECT_EQ(prefix_sums(rats({0, 1, 2, 3, 4})), rats({0, 1, 3, 6, 10}));
    EXPECT_EQ(strict_order(prefix_sums(rats({0, 1, 2, 3, 4}))), 2u);
    auto p = prefix_sums(rats({2, 1, 2, 5, 10}));
    EXPECT_EQ(p, rats({2, 3, 5, 10, 20}));
    EXPECT_EQ(strict_order(p), 3u);
}

TEST(SubsequenceBySteps, WorkedExamples) {
    auto sq = sample_poly({0, 0, 1}, 60);
    auto id = subsequence_by_steps(sq, {0, 1, 1, 1, 1, 1});
    EXPECT_EQ(id, sq.prefix(6));
    EXPECT_EQ(strict_order(id), 2u);

    auto lin = sample_poly({0, 1}, 60);
    std::vector<std::int64_t> tri{0, 1, 2, 3, 4, 5, 6, 7};
    auto b = subsequence_by_steps(lin, tri);
    EXPECT_EQ(b, rats({0, 1, 3, 6, 10, 15, 21, 28}));
    EXPECT_EQ(strict_order(b), 2u);

    auto b2 = subsequence_by_steps(sq, tri);
    for (std::int64_t n = 0; n < 8; ++n) EXPECT_EQ(b2[static_cast<std::size_t>(n)], Rational((n * (n + 1) / 2) * (n * (n + 1) / 2)));
    EXPECT_EQ(strict_order(b2), 4u);

    EXPECT_THROW(subsequence_by_steps(lin, {0, 30, 40}), insufficient_data);
    EXPECT_THROW(subsequence_by_steps(lin, {0, 1, 0}), input_error);
}

TEST(Decimate, WorkedExamples) {
    auto sq = sample_poly({0, 0, 1}, 13);
    EXPECT_EQ(decimate(sq, 1), sq);
    auto d = decimate(sq, 3);
    EXPECT_EQ(d, rats({0, 9, 36, 81, 144}));
    EXPECT_EQ(strict_order(d), 2u);
    EXPECT_EQ(strict_order(decimate(rats({4, 4, 4, 4, 4}), 2)), 0u);
    EXPECT_THROW(decimate(sq, 0), input_error);
    EXPECT_THROW(decimate(rats({1, 2}), 2), insufficient_data);
}

TEST(Structural, RandomPreservationProperties) {
    proptest::Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        auto deg = static_cast<std::size_t>(rng.integer(0, 4));
        auto coeffs = rng.polynomial(deg);
        auto k = static_cast<std::size_t>(rng.integer(1, 5));
        auto s = sample_poly(coeffs, 8 * (deg + 3));
        EXPECT_EQ(strict_order(shift(s, k)), deg);
        EXPECT_EQ(strict_order(decimate(s, k)), deg);
        EXPECT_EQ(strict_order(prefix_sums(s)), deg + 1);
    }
}

TEST(Structural, StepSubsequenceOrder) {
    proptest::Rng rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        auto h = static_cast<std::size_t>(rng.integer(0, 3));
        auto k = static_cast<std::size_t>(rng.integer(0, 2));
        std::vector<Rational> step_poly;
        for (std::size_t j = 0; j <= k; ++j) step_poly.emplace_back(rng.integer(1, 3));
        const std::size_t len = h * (k + 1) + 3;
        std::vector<std::int64_t> steps;
        for (std::size_t n = 0; n < len; ++n)
            steps.push_back(oracle::eval_poly(step_poly, Rational(static_cast<std::int64_t>(n))).numerator().convert_to<std::int64_t>());
        const auto total = std::accumulate(steps.begin(), steps.end(), std::int64_t{0});
        auto a = sample_poly(rng.polynomial(h), static_cast<std::size_t>(total) + 1);
        EXPECT_EQ(strict_order(subsequence_by_steps(a, steps)), h * (k + 1));
    }
}

TEST(Diagonal, WorkedExamples) {
    auto sum = DoubleSequence<Rational>::generate(6, 6, [](std::size_t i, std::size_t j) { return Rational(static_cast<std::int64_t>(i + j)); });
    auto r = diagonal(sum);
    EXPECT_EQ(r.row_order, 1u);
    EXPECT_EQ(r.col_order, 1u);
    EXPECT_EQ(r.diagonal, rats({0, 2, 4, 6, 8, 10}));
    EXPECT_TRUE(r.within_bound());
    EXPECT_EQ(r.analysis.order(), 1u);
    EXPECT_FALSE(r.strict_at_bound());

    auto prod = DoubleSequence<Rational>::generate(6, 6, [](std::size_t i, std::size_t j) { return Rational(static_cast<std::int64_t>(i * j)); });
    auto p = diagonal(prod);
    EXPECT_EQ(p.analysis.order(), 2u);
    EXPECT_TRUE(p.strict_at_bound());

    auto c = diagonal(DoubleSequence<Rational>::generate(4, 4, [](std::size_t, std::size_t) { return Rational(7); }));
    EXPECT_EQ(c.diagonal, rats({7, 7, 7, 7}));
    EXPECT_EQ(c.analysis.order(), 0u);
}

TEST(Diagonal, ReportsHypothesisViolations) {
    auto bad = DoubleSequence<Rational>::generate(6, 6, [](std::size_t i, std::size_t j) {
        return Rational(static_cast<std::int64_t>(i + (std::int64_t{1} << j)));
    });
    try {
        diagonal(bad, OrderOptions{3, 1});
        FAIL();
    } catch (const hypothesis_violation& e) {
        EXPECT_EQ(e.failed().size(), 6u);
        EXPECT_EQ(e.failed().front(), "row 0 is not an arithmetic progression on the grid");
    }
    auto tiny = DoubleSequence<Rational>::generate(3, 3, [](std::size_t i, std::size_t j) {
        return Rational(static_cast<std::int64_t>(i * i * j * j));
    });
    EXPECT_THROW(diagonal(tiny, OrderOptions{SIZE_MAX, 2}), inconclusive);
    EXPECT_THROW(diagonal(bad), inconclusive);
}

TEST(Diagonal, RandomBivariateGrids) {
    proptest::Rng rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        auto k = static_cast<std::size_t>(rng.integer(0, 4));
        auto h = static_cast<std::size_t>(rng.integer(0, 4));
        // p(i, j) = sum c[a][b] i^a j^b with a <= h, b <= k
        std::vector<std::vector<Rational>> c(h + 1, std::vector<Rational>(k + 1));
        for (auto& row : c)
            for (auto& x : row) x = rng.rational(9);
        c[h][k] = rng.nonzero_rational(9);
        auto eval = [&](std::int64_t i, std::int64_t j) {
            Rational acc;
            for (std::size_t a = 0; a <= h; ++a)
                for (std::size_t b = 0; b <= k; ++b) acc += c[a][b] * pow(Rational(i), static_cast<std::int64_t>(a)) * pow(Rational(j), static_cast<std::int64_t>(b));
            return acc;
        };
        const std::size_t n = k + h + 3;
        auto grid = DoubleSequence<Rational>::generate(n, n, [&](std::size_t i, std::size_t j) {
            return eval(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
        });
        auto r = diagonal(grid);
        EXPECT_EQ(r.row_order, k);
        EXPECT_EQ(r.col_order, h);
        EXPECT_TRUE(r.within_bound());
        // Strict at k+h exactly when the fitted diagonal polynomial has degree k+h.
        std::vector<Rational> nodes;
        for (std::size_t i = 0; i <= k + h; ++i) nodes.push_back(eval(static_cast<std::int64_t>(i), static_cast<std::int64_t>(i)));
        auto fitted = oracle::interpolate_monomial(nodes);
        EXPECT_EQ(r.strict_at_bound(), !fitted.back().is_zero());
    }
}

TEST(FactorialWeightedSum, VanishesForOrderHProgressions) {
    proptest::Rng rng(34);
    for (int trial = 0; trial < 60; ++trial) {
        auto h = rng.integer(0, 5);
        auto s = sample_poly(rng.polynomial(static_cast<std::size_t>(h)), static_cast<std::size_t>(h + 5));
        for (std::int64_t n = 2; n <= 4; ++n)
            for (std::int64_t ell = 0; ell <= n - 2; ++ell) EXPECT_TRUE(factorial_weighted_sum(s, h, n, ell).is_zero());
    }
    // Fails for a sequence of higher order.
    auto cube = sample_poly({0, 0, 0, 1}, 8);
    EXPECT_FALSE(factorial_weighted_sum(cube, 0, 2, 0).is_zero());
}

TEST(Polynomial, Arithmetic) {
    auto p = zpoly({-1, 0, 1});
    auto q = zpoly({-1, 1});
    auto [quot, rem] = Polynomial::divmod(p, q);
    EXPECT_EQ(quot, zpoly({1, 1}));
    EXPECT_TRUE(rem.is_zero());
    EXPECT_EQ(p.str(), "z^2 - 1");
    EXPECT_EQ(zpoly({1, 0, -2, 0, 1}).str(), "z^4 - 2z^2 + 1");
    EXPECT_EQ(Polynomial().degree(), -1);
    EXPECT_EQ(p(Rational(3)), Rational(8));
}

TEST(CharPoly, WorkedExamples) {
    EXPECT_EQ(char_poly(1, 0).poly, zpoly({-1, 1}));
    EXPECT_EQ(char_poly(2, 1).poly, zpoly({1, 0, -2, 0, 1}));
    EXPECT_EQ(char_poly(3, 0).poly, zpoly({-1, 0, 0, 1}));
    EXPECT_EQ(char_poly(2, 1).factored->multiplicity, 2);
}

TEST(CharPoly, MatchesRepeatedMultiplication) {
    for (std::int64_t c = 1; c <= 5; ++c)
        for (std::int64_t h = 0; h <= 4; ++h) {
            Polynomial base = Polynomial::monomial(Rational(1), static_cast<std::size_t>(c)) - zpoly({1});
            Polynomial expect = zpoly({1});
            for (std::int64_t i = 0; i <= h; ++i) expect = expect * base;
            EXPECT_EQ(char_poly(c, h).poly, expect);
        }
}

TEST(PolyGcd, WorkedExamples) {
    EXPECT_EQ(poly_gcd(zpoly({-1, 0, 1}), zpoly({-1, 0, 0, 1})), zpoly({-1, 1}));
    auto p = zpoly({2, 4, 6});
    EXPECT_EQ(poly_gcd(p, p), p.monic());
    EXPECT_EQ(poly_gcd(char_poly(2, 1), char_poly(3, 2)).poly, zpoly({1, -2, 1}));
    EXPECT_THROW(poly_gcd(Polynomial(), p), input_error);
}

TEST(GcdRefine, WorkedExamples) {
    auto a = gcd_refine(2, 1, 3, 2);
    EXPECT_EQ(a.e, 1);
    EXPECT_EQ(a.ell, 1);
    EXPECT_EQ(a.certificate.poly, zpoly({1, -2, 1}));
    auto b = gcd_refine(5, 3, 5, 3);
    EXPECT_EQ(b.e, 5);
    EXPECT_EQ(b.ell, 3);
    auto c = gcd_refine(4, 3, 6, 1);
    EXPECT_EQ(c.e, 2);
    EXPECT_EQ(c.ell, 1);
    EXPECT_EQ(c.certificate.poly, zpoly({1, 0, -2, 0, 1}));
    EXPECT_THROW(gcd_refine(0, 1, 2, 1), input_error);
}

TEST(GcdRefine, CertificateHoldsOnFullRange) {
    for (std::int64_t c = 1; c <= 6; ++c)
        for (std::int64_t d = 1; d <= 6; ++d)
            for (std::int64_t h = 0; h <= 4; ++h)
                for (std::int64_t k = 0; k <= 4; ++k) {
                    auto r = gcd_refine(c, h, d, k);
                    EXPECT_EQ(r.e, std::gcd(c, d));
                    EXPECT_EQ(r.ell, std::min(h, k));
                }
}

TEST(GcdRefine, AgreesWithDecimatedSequences) {
    // a_n = n^2 on multiples of 2 and of 3: both have strict order 2, so a_n does.
    auto a = sample_poly({0, 0, 1}, 40);
    auto r = gcd_refine(2, strict_order(decimate(a, 2)), 3, strict_order(decimate(a, 3)));
    EXPECT_EQ(r.e, 1);
    EXPECT_EQ(static_cast<std::size_t>(r.ell), strict_order(a));
}
