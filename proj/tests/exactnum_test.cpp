#include <gtest/gtest.h>

#include <thread>

#include "apseq/exactnum/combinatorics.hpp"
#include "apseq/exactnum/gaussian_rational.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace apseq;

TEST(Rational, NormalizesOnConstruction) {
    Rational r(BigInteger(6), BigInteger(-4));
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(Rational(BigInteger(0), BigInteger(-7)), Rational(0));
    EXPECT_EQ(Rational(BigInteger(0), BigInteger(-7)).denominator(), 1);
    EXPECT_THROW(Rational(BigInteger(1), BigInteger(0)), input_error);
}

TEST(Rational, TextFormat) {
    EXPECT_EQ(Rational::parse("2/1").str(), "2");
    EXPECT_EQ(Rational::parse("-6/4").str(), "-3/2");
    EXPECT_EQ(Rational::parse(" 17 ").str(), "17");
    EXPECT_EQ(Rational::parse("-1.25").str(), "-5/4");
    EXPECT_EQ(Rational::parse("0.5"), Rational(BigInteger(1), BigInteger(2)));
    EXPECT_THROW(Rational::parse(""), input_error);
    EXPECT_THROW(Rational::parse("1/0"), input_error);
    EXPECT_THROW(Rational::parse("abc"), input_error);
    EXPECT_THROW(Rational::parse("1/2/3"), input_error);
}

TEST(Rational, DoubleConversion) {
    EXPECT_EQ(Rational::from_double(0.75).str(), "3/4");
    EXPECT_EQ(Rational::from_double(-3.0).str(), "-3");
    EXPECT_DOUBLE_EQ(Rational(BigInteger(1), BigInteger(3)).to_double(), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(Rational(BigInteger(-22), BigInteger(7)).to_double(), -22.0 / 7.0);
    EXPECT_EQ(Rational::from_double(0.1).to_double(), 0.1);
}

TEST(Rational, OrderingAndPow) {
    Rational a = Rational::parse("1/3"), b = Rational::parse("1/2");
    EXPECT_LT(a, b);
    EXPECT_GT(-a, -b);
    EXPECT_EQ(pow(b, 3), Rational::parse("1/8"));
    EXPECT_EQ(pow(b, -2), Rational(4));
    EXPECT_EQ(pow(a, 0), Rational(1));
    EXPECT_THROW(Rational(1) / Rational(0), input_error);
}

TEST(Rational, FieldLawsOnRandomTriples) {
    proptest::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!b.is_zero()) { EXPECT_EQ((a / b) * b, a); }
    }
}

TEST(GaussianRational, TextFormat) {
    EXPECT_EQ(GaussianRational::parse("1/2+3/4i").str(), "1/2+3/4i");
    EXPECT_EQ(GaussianRational::parse("-i").str(), "-1i");
    EXPECT_EQ(GaussianRational::parse("i").str(), "1i");
    EXPECT_EQ(GaussianRational::parse("3").str(), "3");
    EXPECT_EQ(GaussianRational::parse("0").str(), "0");
    EXPECT_EQ(GaussianRational::parse("2-1/2i").str(), "2-1/2i");
    EXPECT_EQ(GaussianRational::parse("-2/3i").str(), "-2/3i");
    for (const char* s : {"1/2+3/4i", "-1i", "7", "-5/3-2i", "4/5i"})
        EXPECT_EQ(GaussianRational::parse(GaussianRational::parse(s).str()), GaussianRational::parse(s));
    EXPECT_THROW(GaussianRational::parse("1+"), input_error);
    EXPECT_THROW(GaussianRational::parse("x"), input_error);
}

TEST(GaussianRational, FieldLawsAndConjugation) {
    proptest::Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        GaussianRational a = rng.gaussian(), b = rng.gaussian(), c = rng.gaussian();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(conj(conj(a)), a);
        EXPECT_EQ(conj(a * b), conj(a) * conj(b));
        EXPECT_EQ(a * conj(a), GaussianRational(a.norm()));
        if (!b.is_zero()) { EXPECT_EQ((a / b) * b, a); }
    }
    GaussianRational i = GaussianRational::parse("i");
    EXPECT_EQ(i * i, GaussianRational(Rational(-1)));
}

TEST(Binomial, WorkedExamples) {
    EXPECT_EQ(binomial(5, 2), oracle::binomial(5, 2));
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(3, 5), 0);
    for (int n = 0; n < 20; ++n) EXPECT_EQ(binomial(n, 0), 1);
    EXPECT_THROW(binomial(-1, 0), input_error);
    EXPECT_THROW(binomial(3, -1), input_error);
}

TEST(Binomial, AgreesWithFactorialOracleAndPascal) {
    for (int n = 0; n <= 60; ++n)
        for (int k = 0; k <= n + 2; ++k) {
            EXPECT_EQ(binomial(n, k), oracle::binomial(n, k));
            if (n >= 1 && k >= 1) { EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)); }
        }
}

TEST(Binomial, BeyondCacheBoundUsesDirectFormula) {
    BinomialTable small(10);
    for (int n = 0; n <= 40; ++n)
        for (int k = 0; k <= n; ++k) EXPECT_EQ(small.get(n, k), oracle::binomial(n, k));
    EXPECT_EQ(binomial(300, 150), oracle::binomial(300, 150));
}

TEST(Binomial, PerThreadCachesAgree) {
    BigInteger a, b;
    std::thread t1([&] { a = binomial(90, 45); });
    std::thread t2([&] { b = binomial(90, 45); });
    t1.join();
    t2.join();
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, oracle::binomial(90, 45));
}

TEST(GeneralizedBinomial, MatchesFallingProduct) {
    for (int t = -12; t <= 12; ++t)
        for (int k = 0; k <= 8; ++k) EXPECT_EQ(Rational(generalized_binomial(t, k)), oracle::falling_binomial(t, k));
}

TEST(LagrangeWeight, WorkedExamples) {
    for (int h = 0; h <= 8; ++h)
        for (int k = 0; k <= h; ++k) EXPECT_EQ(lagrange_weight(k, k, h), Rational(1)) << k << " " << h;
    EXPECT_EQ(lagrange_weight(0, 0, 0), Rational(1));
    EXPECT_EQ(lagrange_weight(5, 1, 2), oracle::lagrange_weight_binomial_form(5, 1, 2));
    // 5 * 3 / (1! 1!) with sign (-1)^1
    EXPECT_EQ(lagrange_weight(5, 1, 2), Rational(-15));
    EXPECT_THROW(lagrange_weight(5, 3, 2), input_error);
}

TEST(LagrangeWeight, AgreesWithBinomialProductForm) {
    for (int n = -6; n <= 30; ++n)
        for (int h = 0; h <= 10; ++h)
            for (int k = 0; k <= h; ++k)
                EXPECT_EQ(lagrange_weight(n, k, h), oracle::lagrange_weight_binomial_form(n, k, h))
                    << n << " " << k << " " << h;
}

TEST(LagrangeWeight, VanishesAtOtherNodes) {
    for (int h = 0; h <= 8; ++h)
        for (int k = 0; k <= h; ++k)
            for (int n = 0; n <= h; ++n)
                if (n != k) { EXPECT_TRUE(lagrange_weight(n, k, h).is_zero()); }
}

TEST(Stirling, FallingFactorialExpansion) {
    const auto s = stirling_first_kind(10);
    for (std::int64_t k = 0; k <= 10; ++k)
        for (std::int64_t n = -5; n <= 15; ++n) {
            BigInteger falling = 1;
            for (std::int64_t i = 0; i < k; ++i) falling *= n - i;
            BigInteger sum = 0, p = 1;
            for (std::int64_t j = 0; j <= k; ++j) {
                sum += s[k][j] * p;
                p *= n;
            }
            EXPECT_EQ(sum, falling);
        }
}

TEST(Identities, WorkedExamples) {
    // 1 - 4 + 6 = 3 = C(3, 2)
    BigInteger direct = 1 - 4 + 6;
    EXPECT_EQ(direct, oracle::binomial(3, 2));
    EXPECT_TRUE(verify_identity(AlternatingPartialSum{4, 2}));
    for (int n = 0; n < 10; ++n) EXPECT_TRUE(verify_identity(UnitySum{n, 0}));
    EXPECT_TRUE(verify_identity(SkippedSum{5, 2, 1}));
    EXPECT_EQ(identity_name(IdentityCase{SkippedSum{5, 2, 1}}), "skipped_sum");
}

TEST(Identities, RejectOutOfRangeParameters) {
    EXPECT_THROW(verify_identity(AlternatingPartialSum{3, 3}), input_error);
    EXPECT_THROW(verify_identity(AlternatingPartialSum{3, -1}), input_error);
    EXPECT_THROW(verify_identity(SkippedSum{3, 3, 1}), input_error);
    EXPECT_THROW(verify_identity(SkippedSum{5, 2, 3}), input_error);
    EXPECT_THROW(verify_identity(UnitySum{-1, 2}), input_error);
}

TEST(Identities, HoldOnFullRanges) {
    for (int i = 1; i <= 40; ++i)
        for (int j = 0; j < i; ++j) EXPECT_TRUE(verify_identity(AlternatingPartialSum{i, j}));
    for (int n = 1; n <= 30; ++n)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k <= h; ++k) {
                EXPECT_TRUE(verify_identity(SkippedSum{n, h, k}));
                EXPECT_TRUE(verify_identity(UnitySum{n, h}));
            }
}
