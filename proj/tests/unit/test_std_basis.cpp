#include "oracles.hpp"
#include "qtri/errors.hpp"
#include "qtri/std_basis.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qtri;

namespace {

const IntMatrix kRankTwo = IntMatrix::from_rows({{0, -3}, {3, 0}});

TorusElem X(const Seed& s, ExpVec e) { return TorusElem::monomial(s.lambda, std::move(e)); }

}  // namespace

TEST(StdBasis, XPrime) {
    const Seed s = principal_seed(kRankTwo);
    EXPECT_EQ(x_prime(s, 0), X(s, {-1, 3, 1, 0}) + X(s, {-1, 0, 0, 0}));
    EXPECT_EQ(x_prime(s, 1), X(s, {0, -1, 0, 1}) + X(s, {3, -1, 0, 0}));
}

TEST(StdBasis, StdMonomials) {
    const Seed s = principal_seed(kRankTwo);
    StdBasis basis(s, bipartite_parts(kRankTwo));
    const TorusElem& pos = basis.monomial({2, 1, 0, 3});
    EXPECT_EQ(pos.num_terms(), 1u);
    EXPECT_TRUE(is_bar_invariant(pos));
    EXPECT_EQ(basis.monomial({0, -1, 0, 0}), x_prime(s, 1));
    const TorusElem& both = basis.monomial({-1, -1, 0, 0});
    EXPECT_EQ(both.num_terms(), 4u);
    EXPECT_EQ(std_monomial(s, {-1, -1, 0, 0}, basis.order()), both);
}

TEST(StdBasis, TopExponent) {
    StdBasis basis(principal_seed(kRankTwo), bipartite_parts(kRankTwo));
    EXPECT_EQ(basis.top_exponent({0, -1, 0, 0}), (ExpVec{0, -1, 0, 1}));
    EXPECT_EQ(basis.top_exponent({2, 1, 0, 3}), (ExpVec{2, 1, 0, 3}));
    EXPECT_EQ(basis.top_inverse({0, -1, 0, 1}), (ExpVec{0, -1, 0, 0}));
}

TEST(StdBasis, ExpandBasisElement) {
    StdBasis basis(principal_seed(kRankTwo), bipartite_parts(kRankTwo));
    const ExpVec a{-2, 3, 1, 0};
    const StdExpansion x = basis.expand(basis.monomial(a));
    ASSERT_EQ(x.size(), 1u);
    EXPECT_EQ(x.begin()->first, a);
    EXPECT_EQ(x.begin()->second, LaurentPoly(1));
}

TEST(StdBasis, ExpandProductOfMutatedVariables) {
    const Seed s = principal_seed(kRankTwo);
    StdBasis basis(s, bipartite_parts(kRankTwo));
    const TorusElem prod = x_prime(s, 0) * x_prime(s, 1);
    const StdExpansion x = basis.expand(prod);
    ASSERT_TRUE(x.count({-1, -1, 0, 0}));
    EXPECT_EQ(x.at({-1, -1, 0, 0}).num_terms(), 1u);
    EXPECT_EQ(basis.reexpand(x), prod);
}

TEST(StdBasis, IterationCap) {
    StdBasis basis(principal_seed(kRankTwo), bipartite_parts(kRankTwo));
    basis.set_iteration_cap(1);
    const Seed& s = basis.seed();
    EXPECT_THROW(basis.expand(x_prime(s, 0) * x_prime(s, 1) * x_prime(s, 0)), InvariantViolation);
}

TEST(StdBasisProperty, MonomialsHaveUnitTop) {
    std::mt19937_64 rng(51);
    for (int it = 0; it < 200; ++it) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const IntMatrix B = oracle::random_bipartite(rng, n, 3);
        StdBasis basis(principal_seed(B), bipartite_parts(B));
        ExpVec a = oracle::random_vector(rng, 2 * n, -3, 3);
        const TorusElem& e = basis.monomial(a);
        const ExpVec top = basis.top_exponent(a);
        EXPECT_EQ(e.coeff_at(top), LaurentPoly(1));
        EXPECT_EQ(basis.top_inverse(top), a);
        const StdExpansion x = basis.expand(e);
        ASSERT_EQ(x.size(), 1u);
        EXPECT_EQ(x.begin()->first, a);
        // bar(E_a) = E_a + (terms with smaller top exponent).
        const StdExpansion y = basis.expand(bar(e));
        EXPECT_EQ(y.at(a), LaurentPoly(1));
    }
}

TEST(StdBasisProperty, ExpandThenReexpandIsIdentity) {
    std::mt19937_64 rng(52);
    for (int it = 0; it < 60; ++it) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const IntMatrix B = oracle::random_bipartite(rng, n, 2);
        StdBasis basis(principal_seed(B), bipartite_parts(B));
        const TorusElem f = basis.monomial(oracle::random_vector(rng, 2 * n, -2, 2)) *
                            basis.monomial(oracle::random_vector(rng, 2 * n, -2, 2));
        EXPECT_EQ(basis.reexpand(basis.expand(f)), f);
    }
}
