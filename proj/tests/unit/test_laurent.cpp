#include "oracles.hpp"
#include "qtri/errors.hpp"
#include "qtri/laurent.hpp"

#include <gtest/gtest.h>

#include <random>

using qtri::LaurentPoly;

namespace {

LaurentPoly P(std::initializer_list<std::pair<const int, qtri::Integer>> t) { return LaurentPoly(LaurentPoly::CoeffMap(t)); }

LaurentPoly random_poly(std::mt19937_64& rng, int span, int cmax) {
    std::uniform_int_distribution<int> deg(-span, span);
    std::uniform_int_distribution<int> c(-cmax, cmax);
    LaurentPoly p;
    for (int i = 0; i < 5; ++i) p += LaurentPoly::monomial(deg(rng), c(rng));
    return p;
}

}  // namespace

TEST(Laurent, Arithmetic) {
    const LaurentPoly vpv = P({{1, 1}, {-1, 1}});
    EXPECT_EQ(vpv + P({{-1, -1}}), LaurentPoly::monomial(1));
    EXPECT_EQ(vpv * vpv, P({{2, 1}, {0, 2}, {-2, 1}}));
    EXPECT_EQ(qtri::qint(2) * qtri::qint(3), P({{3, 1}, {1, 2}, {-1, 2}, {-3, 1}}));
    EXPECT_TRUE((vpv - vpv).is_zero());
    EXPECT_EQ(-vpv + vpv, LaurentPoly());
}

TEST(Laurent, Bar) {
    EXPECT_EQ(qtri::bar(P({{2, 1}, {0, 2}})), P({{-2, 1}, {0, 2}}));
    const LaurentPoly sym = P({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}});
    EXPECT_EQ(qtri::bar(sym), sym);
    EXPECT_EQ(qtri::bar(P({{3, 1}, {1, 1}})), P({{-3, 1}, {-1, 1}}));
}

TEST(Laurent, QBinomialValues) {
    EXPECT_EQ(qtri::qbinom(7, 0), LaurentPoly(1));
    EXPECT_EQ(qtri::qbinom(2, 1), P({{1, 1}, {-1, 1}}));
    const LaurentPoly b42 = qtri::qbinom(4, 2);
    EXPECT_EQ(b42, P({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}}));
    EXPECT_EQ(b42.eval_at_one(), 6);
    EXPECT_TRUE(qtri::qbinom(3, 4).is_zero());
    EXPECT_TRUE(qtri::qbinom(3, -1).is_zero());
    EXPECT_THROW(qtri::qint(-1), qtri::DomainError);
}

TEST(Laurent, QBinomialMatchesProductQuotient) {
    for (int n = 0; n <= 14; ++n)
        for (int k = 0; k <= n; ++k) EXPECT_EQ(qtri::qbinom(n, k), qtri::oracle::qbinom_quotient(n, k)) << n << ' ' << k;
}

TEST(Laurent, QBinomialGrassmannBetti) {
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto betti = qtri::oracle::grassmann_betti(n, k);
            const LaurentPoly b = qtri::qbinom(n, k);
            for (std::size_t j = 0; j < betti.size(); ++j)
                EXPECT_EQ(b.coeff(2 * static_cast<int>(j) - k * (n - k)), betti[j]);
        }
    }
}

TEST(Laurent, SymmetryUnimodalityDegree) {
    const LaurentPoly a = P({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}});
    EXPECT_TRUE(qtri::is_symmetric(a));
    EXPECT_TRUE(qtri::is_unimodal(a));
    EXPECT_EQ(qtri::deg(a), 4);
    const LaurentPoly gap = P({{2, 1}, {-2, 1}});
    EXPECT_TRUE(qtri::is_symmetric(gap));
    EXPECT_FALSE(qtri::is_unimodal(gap));
    EXPECT_TRUE(qtri::is_unimodal(LaurentPoly(1)));
    EXPECT_EQ(qtri::deg(LaurentPoly(1)), 0);
    EXPECT_TRUE(qtri::is_unimodal(P({{3, 1}, {1, 1}, {-1, 1}, {-3, 1}})));
    EXPECT_FALSE(qtri::is_unimodal(P({{1, 1}, {0, 3}, {-1, 2}, {-2, 3}})));
    EXPECT_FALSE(qtri::is_symmetric(P({{1, 1}})));
    EXPECT_THROW(qtri::deg(LaurentPoly()), std::domain_error);
}

TEST(Laurent, UnimodalityAgreesWithOracle) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 3000; ++i) {
        LaurentPoly p = random_poly(rng, 4, 3);
        p += qtri::bar(p);
        EXPECT_EQ(qtri::is_unimodal(p), qtri::oracle::unimodal(p)) << p.to_string();
    }
}

TEST(Laurent, PositivePart) {
    EXPECT_EQ(qtri::positive_part(P({{3, 1}, {1, 1}, {-1, -1}, {-3, -1}})), P({{3, 1}, {1, 1}}));
    EXPECT_TRUE(qtri::positive_part(LaurentPoly()).is_zero());
    EXPECT_EQ(qtri::positive_part(P({{2, 2}, {-2, -2}})), P({{2, 2}}));
    EXPECT_THROW(qtri::positive_part(P({{1, 1}})), qtri::InvariantViolation);
}

TEST(Laurent, ToString) {
    EXPECT_EQ(P({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}}).to_string(), "v^4 + v^2 + 2 + v^-2 + v^-4");
    EXPECT_EQ(P({{1, -3}, {0, 1}}).to_string(), "-3v + 1");
    EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(LaurentProperty, RingAxioms) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const auto a = random_poly(rng, 6, 9);
        const auto b = random_poly(rng, 6, 9);
        const auto c = random_poly(rng, 6, 9);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(qtri::bar(a * b), qtri::bar(a) * qtri::bar(b));
        EXPECT_EQ(qtri::bar(qtri::bar(a)), a);
        EXPECT_EQ((a * b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        EXPECT_EQ(qtri::multiply_shifted(a, b, 3), (a * b).shifted(3));
        const auto anti = a - qtri::bar(a);
        const auto pp = qtri::positive_part(anti);
        EXPECT_EQ(pp - qtri::bar(pp), anti);
    }
}

TEST(LaurentProperty, OverflowPromotesToBigIntegers) {
    const LaurentPoly big = LaurentPoly::monomial(0, qtri::Integer("4611686018427387904"));  // 2^62
    LaurentPoly sq = big * big;
    EXPECT_EQ(sq.coeff(0), qtri::Integer("21267647932558653966460912964485513216"));
    EXPECT_EQ(sq + sq - sq, sq);
    LaurentPoly p = qtri::qint(3);
    for (int i = 0; i < 60; ++i) p *= LaurentPoly(1000003);
    LaurentPoly back = p;
    mpz_class scale = 1;
    for (int i = 0; i < 60; ++i) scale *= 1000003;
    EXPECT_EQ(back.coeff(2), scale);
    EXPECT_EQ(p - p, LaurentPoly());
    EXPECT_EQ(p - LaurentPoly(p.coeffs()), LaurentPoly());
    // Demotion: a big result that cancels back to small equals its small twin.
    EXPECT_EQ(big * LaurentPoly(2) - big - big + qtri::qint(2), qtri::qint(2));
}
