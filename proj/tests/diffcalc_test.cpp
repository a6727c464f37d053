#include <gtest/gtest.h>

#include <cmath>

#include "apseq/diffcalc.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace apseq;

namespace {

Sequence<Rational> rats(std::initializer_list<std::int64_t> xs) {
    std::vector<Rational> v;
    for (auto x : xs) v.emplace_back(x);
    return Sequence<Rational>(std::move(v));
}

std::vector<Rational> rvec(std::initializer_list<std::int64_t> xs) {
    std::vector<Rational> v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

Sequence<Rational> sample_poly(const std::vector<Rational>& coeffs, std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(oracle::eval_poly(coeffs, Rational(static_cast<std::int64_t>(i))));
    return Sequence<Rational>(std::move(v));
}

}  // namespace

TEST(Sequence, Invariants) {
    EXPECT_THROW(Sequence<Rational>(std::vector<Rational>{}), insufficient_data);
    EXPECT_THROW(Sequence<Rational>(rvec({1, 2}), 0.5), input_error);
    EXPECT_THROW(Sequence<double>(std::vector<double>{1.0}, 0.0), input_error);
    EXPECT_EQ(Sequence<double>(std::vector<double>{1.0}).tolerance(), kDefaultTolerance);
    EXPECT_EQ(rats({1}).mode(), Mode::exact);
    std::vector<RationalVector> mixed{RationalVector{1, 2}, RationalVector{1}};
    EXPECT_THROW(Sequence<RationalVector>{mixed}, input_error);
}

TEST(Difference, WorkedExamples) {
    EXPECT_EQ(difference(rats({2, 1, 2, 5, 10})).elements(), rvec({-1, 1, 3, 5}));
    EXPECT_EQ(difference(rats({7, 7, 7})).elements(), rvec({0, 0}));
    EXPECT_EQ(difference(rats({0, 1, 4, 9})).elements(), rvec({1, 3, 5}));
    EXPECT_THROW(difference(rats({3})), insufficient_data);
}

TEST(IteratedDifference, WorkedExamples) {
    auto a = rats({2, 1, 2, 5, 10});
    EXPECT_EQ(iterated_difference(a, 2).elements(), rvec({2, 2, 2}));
    EXPECT_EQ(iterated_difference(a, 0), a);
    EXPECT_EQ(iterated_difference(a, 0, DifferenceMode::direct), a);
    auto sq = rats({0, 1, 4, 9, 16});
    EXPECT_EQ(iterated_difference(sq, 2, DifferenceMode::iterative).elements(), rvec({2, 2, 2}));
    EXPECT_EQ(iterated_difference(sq, 2, DifferenceMode::direct).elements(), rvec({2, 2, 2}));
    EXPECT_THROW(iterated_difference(sq, 5), insufficient_data);
    EXPECT_THROW(iterated_difference(sq, 5, DifferenceMode::direct), insufficient_data);
}

TEST(IteratedDifference, ModesAgreeOnRandomSequences) {
    proptest::Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 16));
        std::vector<Rational> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(rng.rational());
        Sequence<Rational> s(v);
        for (std::size_t h = 0; h < n; ++h)
            EXPECT_EQ(iterated_difference(s, h, DifferenceMode::iterative),
                      iterated_difference(s, h, DifferenceMode::direct));
    }
}

TEST(NewtonTableau, WorkedExamples) {
    EXPECT_EQ(newton_tableau(rats({2, 1, 2, 5, 10})), rvec({2, -1, 2, 0, 0}));
    EXPECT_EQ(newton_tableau(rats({4, 4, 4})), rvec({4, 0, 0}));
    EXPECT_EQ(newton_tableau(rats({9})), rvec({9}));
}

TEST(NewtonTableau, ReconstructsEveryTerm) {
    proptest::Rng rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 16));
        std::vector<Rational> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(rng.rational());
        auto coeffs = newton_tableau(Sequence<Rational>(v));
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(newton_value(coeffs, static_cast<std::int64_t>(i)), v[i]);
    }
}

TEST(CertifiedOrder, QuadraticExample) {
    auto r = certified_order(rats({2, 1, 2, 5, 10, 17, 26}), 5);
    EXPECT_EQ(r.order(), 2u);
    EXPECT_TRUE(r.strict);
    EXPECT_EQ(r.windows_checked, 4u);
    EXPECT_EQ(r.monomial->coefficients, rvec({2, -2, 1}));
    EXPECT_EQ(r.leading(), Rational(2));
    EXPECT_EQ(r.newton_coeffs, rvec({2, -1, 2}));
}

TEST(CertifiedOrder, CubicExample) {
    auto r = certified_order(rats({1, 5, 5, 7, 17, 41, 85}), 5);
    EXPECT_EQ(r.order(), 3u);
    EXPECT_TRUE(r.strict);
    EXPECT_EQ(r.monomial->coefficients, rvec({1, 8, -5, 1}));
}

TEST(CertifiedOrder, ExponentialIsNotAnAP) {
    auto s = rats({1, 2, 4, 8, 16, 32});
    EXPECT_THROW(certified_order(s, 4), not_an_ap);
    try {
        certified_order(s, 4, 2);
        FAIL();
    } catch (const not_an_ap& e) {
        EXPECT_EQ(e.max_order(), 4u);
    }
    auto r = analyze_order(s, {4, 1});
    EXPECT_EQ(r.verdict, OrderVerdict::not_an_ap);
    EXPECT_EQ(r.orders_excluded, 5u);
}

TEST(CertifiedOrder, ShortHorizonIsInconclusive) {
    // D^3 of the cubic prefix is a single window.
    auto s = rats({1, 5, 5, 7, 17});
    auto r = analyze_order(s, {SIZE_MAX, 2});
    EXPECT_EQ(r.verdict, OrderVerdict::inconclusive);
    EXPECT_THROW(certified_order(s, 10, 2), inconclusive);
    EXPECT_EQ(certified_order(s, 10, 1).order(), 3u);
    // Every order the horizon can test is refuted, but higher ones are untested.
    auto e = analyze_order(rats({1, 2, 4, 8}));
    EXPECT_EQ(e.verdict, OrderVerdict::inconclusive);
    EXPECT_THROW(certified_order(rats({1}), 3), insufficient_data);
    EXPECT_THROW(analyze_order(s, {3, 0}), input_error);
}

TEST(CertifiedOrder, WindowsInvariant) {
    proptest::Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        auto deg = static_cast<std::size_t>(rng.integer(0, 5));
        auto s = sample_poly(rng.polynomial(deg), deg + 2 + static_cast<std::size_t>(rng.integer(0, 5)));
        auto r = certified_order(s, 10);
        EXPECT_EQ(r.order(), deg);
        EXPECT_EQ(r.windows_checked, s.size() - deg - 1);
        EXPECT_TRUE(r.strict);
        // An order-h progression is also of order h+1.
        if (s.size() > deg + 2) {
            EXPECT_TRUE(iterated_difference(s, deg + 2).elements() == std::vector<Rational>(s.size() - deg - 2));
        }
        auto mono = monomial_form(r);
        EXPECT_EQ(mono.degree(), deg);
        EXPECT_FALSE(mono.coefficients.back().is_zero());
    }
}

TEST(CertifiedOrder, ZeroSequenceIsOrderZeroButNotStrict) {
    auto r = certified_order(rats({0, 0, 0}), 3);
    EXPECT_EQ(r.order(), 0u);
    EXPECT_FALSE(r.strict);
    auto c = certified_order(rats({5, 5, 5}), 3);
    EXPECT_TRUE(c.strict);
}

TEST(CertifiedOrder, MonomialMatchesVandermondeOracle) {
    proptest::Rng rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        auto deg = static_cast<std::size_t>(rng.integer(0, 6));
        auto coeffs = rng.polynomial(deg);
        auto s = sample_poly(coeffs, deg + 4);
        auto r = certified_order(s, 10);
        std::vector<Rational> nodes(s.elements().begin(), s.elements().begin() + static_cast<std::ptrdiff_t>(deg + 1));
        EXPECT_EQ(r.monomial->coefficients, oracle::interpolate_monomial(nodes));
        EXPECT_EQ(r.monomial->coefficients, coeffs);
    }
}

TEST(MonomialForm, WorkedExamples) {
    EXPECT_EQ(monomial_from_newton(rvec({2, -1, 2})).coefficients, rvec({2, -2, 1}));
    EXPECT_EQ(monomial_from_newton(rvec({7})).coefficients, rvec({7}));
    EXPECT_EQ(monomial_from_newton(rvec({0, 1})).coefficients, rvec({0, 1}));
    auto r = analyze_order(rats({1, 2, 4, 8, 16}), {2, 1});
    EXPECT_THROW(monomial_form(r), precondition_failure);
}

TEST(TermValue, WorkedExamples) {
    auto r = certified_order(rats({2, 1, 2, 5, 10}), 3);
    for (auto f : {TermForm::newton, TermForm::lagrange, TermForm::barycentric}) EXPECT_EQ(term_value(r, 5, f), Rational(17));
    for (std::int64_t n = 0; n <= 2; ++n) EXPECT_EQ(term_value(r, n, TermForm::barycentric), r.nodes[static_cast<std::size_t>(n)]);
    auto r2 = certified_order(rats({1, 5, 5, 7, 17}), 3);
    for (auto f : {TermForm::newton, TermForm::lagrange, TermForm::barycentric}) EXPECT_EQ(term_value(r2, 5, f), Rational(41));
    EXPECT_THROW(term_value(r, -1, TermForm::newton), input_error);
}

TEST(TermValue, FormsAgreeOnRandomPolynomials) {
    proptest::Rng rng(25);
    for (int trial = 0; trial < 100; ++trial) {
        auto deg = static_cast<std::size_t>(rng.integer(0, 6));
        auto coeffs = rng.polynomial(deg);
        auto s = sample_poly(coeffs, deg + 3);
        auto r = certified_order(s, 10);
        for (std::int64_t n = 0; n <= 3 * static_cast<std::int64_t>(s.size()); ++n) {
            Rational expect = oracle::eval_poly(coeffs, Rational(n));
            EXPECT_EQ(term_value(r, n, TermForm::newton), expect);
            EXPECT_EQ(term_value(r, n, TermForm::lagrange), expect);
            EXPECT_EQ(term_value(r, n, TermForm::barycentric), expect);
        }
    }
}

TEST(TermValue, BarycentricRejectsNonScalarElements) {
    std::vector<RationalVector> v;
    for (std::int64_t k = 0; k < 5; ++k) v.push_back(RationalVector{Rational(k), Rational(k * k)});
    auto r = certified_order(Sequence<RationalVector>(v), 4);
    EXPECT_EQ(r.order(), 2u);
    EXPECT_EQ(term_value(r, 7, TermForm::lagrange), (RationalVector{7, 49}));
    EXPECT_THROW(term_value(r, 7, TermForm::barycentric), unsupported_form);
}

TEST(CertifiedOrder, MatrixValuedSequence) {
    // (I+N)^k = I + kN for the 2x2 Jordan nilpotent N.
    ExactMatrix step{{1, 1}, {0, 1}};
    std::vector<ExactMatrix> v;
    for (std::int64_t k = 0; k < 6; ++k) v.push_back(pow(step, k));
    auto r = certified_order(Sequence<ExactMatrix>(v), 4);
    EXPECT_EQ(r.order(), 1u);
    EXPECT_TRUE(r.strict);
    EXPECT_EQ(r.leading(), (ExactMatrix{{0, 1}, {0, 0}}));
}

TEST(CertifiedOrder, ApproximateModeToleratesRounding) {
    std::vector<double> v;
    for (int n = 0; n < 12; ++n) v.push_back(std::sqrt(static_cast<double>((n + 1) * (n + 1))) * 0.1);
    auto r = certified_order(Sequence<double>(v), 6, 2);
    EXPECT_EQ(r.order(), 1u);
    EXPECT_TRUE(r.strict);
    EXPECT_EQ(r.mode, Mode::approximate);
    std::vector<double> e;
    for (int n = 0; n < 12; ++n) e.push_back(std::pow(2.0, n));
    EXPECT_THROW(certified_order(Sequence<double>(e), 6, 2), not_an_ap);
}
