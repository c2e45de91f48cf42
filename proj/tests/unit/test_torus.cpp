#include "oracles.hpp"
#include "qtri/errors.hpp"
#include "qtri/seed.hpp"
#include "qtri/torus.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qtri;

namespace {

Seed rank_two_seed() { return principal_seed(IntMatrix::from_rows({{0, -3}, {3, 0}})); }

TorusElem random_elem(std::mt19937_64& rng, const LambdaHandle& lam, int terms) {
    TorusElem f(lam);
    for (int t = 0; t < terms; ++t) {
        auto e = oracle::random_vector(rng, lam->rows(), -2, 2);
        auto c = oracle::random_vector(rng, 2, -3, 3);
        f.add_term(e, LaurentPoly::monomial(c[0], c[1]));
    }
    return f;
}

}  // namespace

TEST(Torus, LambdaEval) {
    const Seed s = rank_two_seed();
    EXPECT_EQ(lambda_eval(*s.lambda, {0, 0, 1, 0}, {1, 0, 0, 0}), 1);
    EXPECT_EQ(lambda_eval(*s.lambda, {1, 0, 0, 0}, {0, 0, 1, 0}), -1);
    EXPECT_EQ(lambda_eval(*s.lambda, {1, 2, -1, 3}, {1, 2, -1, 3}), 0);
}

TEST(Torus, MonomialProducts) {
    const Seed s = rank_two_seed();
    const auto X = [&](ExpVec e) { return TorusElem::monomial(s.lambda, std::move(e)); };
    EXPECT_EQ(X({1, -2, 0, 3}) * X({-1, 2, 0, -3}), TorusElem::one(s.lambda));
    EXPECT_EQ(X({0, 0, 1, 0}) * X({1, 0, 0, 0}), TorusElem::monomial(s.lambda, {1, 0, 1, 0}, LaurentPoly::monomial(1)));
    const TorusElem lhs = (X({1, 0, 0, 0}) + X({0, 1, 0, 0})) * X({0, 0, 1, 0});
    TorusElem rhs(s.lambda);
    rhs.add_term({1, 0, 1, 0}, LaurentPoly::monomial(static_cast<int>(lambda_eval(*s.lambda, {1, 0, 0, 0}, {0, 0, 1, 0}))));
    rhs.add_term({0, 1, 1, 0}, LaurentPoly::monomial(static_cast<int>(lambda_eval(*s.lambda, {0, 1, 0, 0}, {0, 0, 1, 0}))));
    EXPECT_EQ(lhs, rhs);
}

TEST(Torus, BarAndPowers) {
    const Seed s = rank_two_seed();
    const TorusElem f = TorusElem::monomial(s.lambda, {1, 1, 0, 0}, LaurentPoly::monomial(2));
    EXPECT_EQ(bar(f), TorusElem::monomial(s.lambda, {1, 1, 0, 0}, LaurentPoly::monomial(-2)));
    EXPECT_TRUE(is_bar_invariant(TorusElem::monomial(s.lambda, {3, -1, 2, 0})));
    EXPECT_EQ(torus_pow(f, 0), TorusElem::one(s.lambda));
    EXPECT_EQ(TorusElem::one(s.lambda).coeff_at({0, 0, 0, 0}), LaurentPoly(1));

    TorusElem x2 = TorusElem::monomial(s.lambda, {0, -1, 0, 1}) + TorusElem::monomial(s.lambda, {3, -1, 0, 0});
    const TorusElem sq = torus_pow(x2, 2);
    EXPECT_EQ(sq.num_terms(), 3u);
    EXPECT_EQ(sq.coeff_at({3, -2, 0, 1}), qbinom(2, 1));
}

TEST(Torus, IncompatibleFormsRejected) {
    const Seed a = rank_two_seed();
    const Seed b = principal_seed(IntMatrix::from_rows({{0, -1}, {1, 0}}));
    EXPECT_THROW(TorusElem::one(a.lambda) * TorusElem::one(b.lambda), DomainError);
    // Equal forms held by different handles are compatible.
    const Seed c = rank_two_seed();
    EXPECT_NO_THROW(TorusElem::one(a.lambda) * TorusElem::one(c.lambda));
}

TEST(TorusProperty, ProductMatchesNaiveOracle) {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 200; ++it) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const Seed s = principal_seed(oracle::random_bipartite(rng, n, 3));
        const TorusElem f = random_elem(rng, s.lambda, 4);
        const TorusElem g = random_elem(rng, s.lambda, 4);
        const auto expect = oracle::torus_product(*s.lambda, f.terms(), g.terms());
        EXPECT_EQ((f * g).terms(), expect);
    }
}

TEST(TorusProperty, AlgebraLaws) {
    std::mt19937_64 rng(22);
    for (int it = 0; it < 150; ++it) {
        const Seed s = principal_seed(oracle::random_bipartite(rng, 2, 2));
        const TorusElem f = random_elem(rng, s.lambda, 3);
        const TorusElem g = random_elem(rng, s.lambda, 3);
        const TorusElem h = random_elem(rng, s.lambda, 3);
        EXPECT_EQ((f * g) * h, f * (g * h));
        EXPECT_EQ(f * (g + h), f * g + f * h);
        // Bar is an anti-automorphism.
        EXPECT_EQ(bar(f * g), bar(g) * bar(f));
        EXPECT_EQ(bar(bar(f)), f);
        EXPECT_TRUE((f - f).is_zero());
        EXPECT_EQ(f.scaled(2).scaled(-2), f);
    }
}

TEST(TorusProperty, QuasiCommutation) {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 200; ++it) {
        const Seed s = principal_seed(oracle::random_bipartite(rng, 3, 3));
        const auto e = oracle::random_vector(rng, 6, -3, 3);
        const auto f = oracle::random_vector(rng, 6, -3, 3);
        const TorusElem xe = TorusElem::monomial(s.lambda, e);
        const TorusElem xf = TorusElem::monomial(s.lambda, f);
        const int l = static_cast<int>(lambda_eval(*s.lambda, e, f));
        EXPECT_EQ(xe * xf, (xf * xe).scaled(2 * l));
    }
}
