#include "oracles.hpp"
#include "qtri/errors.hpp"
#include "qtri/seed.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qtri;

namespace {

const IntMatrix kRankTwo = IntMatrix::from_rows({{0, -3}, {3, 0}});
const IntMatrix kRankThree = IntMatrix::from_rows({{0, 0, -2}, {0, 0, -2}, {2, 2, 0}});

}  // namespace

TEST(Seed, PrincipalQuantization) {
    const Seed s = principal_seed(kRankTwo);
    EXPECT_EQ(*s.lambda, IntMatrix::from_rows({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 3}, {0, 1, -3, 0}}));
    EXPECT_EQ(s.btilde, IntMatrix::from_rows({{0, -3}, {3, 0}, {1, 0}, {0, 1}}));
    EXPECT_TRUE(s.is_compatible());
    EXPECT_EQ(*principal_seed(IntMatrix(1, 1)).lambda, IntMatrix::from_rows({{0, -1}, {1, 0}}));

    const Seed t = principal_seed(kRankThree);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ((*t.lambda)(3 + i, 3 + j), -kRankThree(i, j));
    EXPECT_TRUE(t.is_compatible());
    EXPECT_THROW(principal_seed(IntMatrix::from_rows({{0, 1}, {1, 0}})), DomainError);
}

TEST(Seed, BipartiteParts) {
    const auto q2 = bipartite_parts(kRankTwo);
    EXPECT_EQ(q2.sources(), std::vector<int>{0});
    EXPECT_EQ(q2.sinks(), std::vector<int>{1});
    ASSERT_EQ(q2.arrows().size(), 1u);
    EXPECT_EQ(q2.arrows()[0].source, 0);
    EXPECT_EQ(q2.arrows()[0].target, 1);
    EXPECT_EQ(q2.arrows()[0].mult, 3);

    const auto q3 = bipartite_parts(kRankThree);
    EXPECT_EQ(q3.sources(), (std::vector<int>{0, 1}));
    EXPECT_EQ(q3.sinks(), std::vector<int>{2});
    EXPECT_EQ(q3.arrows().size(), 2u);
    for (const auto& h : q3.arrows()) EXPECT_EQ(h.mult, 2);

    const auto q0 = bipartite_parts(IntMatrix(3, 3));
    EXPECT_TRUE(q0.sources().empty());
    EXPECT_EQ(q0.sinks(), (std::vector<int>{0, 1, 2}));
}

TEST(Seed, NonBipartiteNamesVertex) {
    const IntMatrix path = IntMatrix::from_rows({{0, -1, 0}, {1, 0, -1}, {0, 1, 0}});
    try {
        bipartite_parts(path);
        FAIL() << "expected NotBipartiteError";
    } catch (const NotBipartiteError& e) {
        EXPECT_EQ(e.vertex(), 2);
    }
}

TEST(Seed, CqPhiAndW) {
    const auto q2 = bipartite_parts(kRankTwo);
    EXPECT_EQ(cq_apply(q2, {0, 0}), WVector(2));
    EXPECT_EQ(cq_apply(q2, {1, 0}), WVector({1, 0}, {1, -3}));
    const auto q3 = bipartite_parts(kRankThree);
    EXPECT_EQ(cq_apply(q3, {0, 0, 1}), WVector({0, 0, 1}, {-2, -2, 1}));

    EXPECT_EQ(phi(q2, WVector(2)), (ExpVec{0, 0, 0, 0}));
    EXPECT_EQ(phi(q2, WVector({9, 4}, {0, 0})), (ExpVec{9, -4, 0, 0}));
    EXPECT_EQ(phi(q2, WVector({0, 0}, {1, 0})), (ExpVec{-1, 0, 0, 0}));

    EXPECT_EQ(w_of_a(q2, {0, 0, 0, 0}), WVector(2));
    EXPECT_EQ(w_of_a(q2, {9, -4, 0, 0}), WVector({9, 4}, {0, 0}));
    EXPECT_EQ(w_of_a(q3, {4, 3, -3, 0, 0, 0}), WVector({4, 3, 3}, {0, 0, 0}));
}

TEST(Seed, SplitW) {
    auto [f1, p1] = split_w(WVector({1}, {1}));
    EXPECT_EQ(f1, WVector({1}, {1}));
    EXPECT_EQ(p1, WVector(1));
    auto [f2, p2] = split_w(WVector({3}, {1}));
    EXPECT_EQ(f2, WVector({1}, {1}));
    EXPECT_EQ(p2, WVector({2}, {0}));
    auto [f3, p3] = split_w(WVector({0}, {5}));
    EXPECT_EQ(f3, WVector(1));
    EXPECT_EQ(p3, WVector({0}, {5}));
    EXPECT_EQ(WVector::from_interleaved({1, 2, 3, 4}), WVector({1, 3}, {2, 4}));
    EXPECT_EQ(WVector({1, 3}, {2, 4}).interleaved(), (std::vector<int>{1, 2, 3, 4}));
}

TEST(Seed, MuI1) {
    const Seed s0 = principal_seed(IntMatrix(2, 2));
    EXPECT_EQ(mu_I1(s0, bipartite_parts(IntMatrix(2, 2))), s0);
    const Seed s = principal_seed(kRankThree);
    const Seed t = mu_I1(s, bipartite_parts(kRankThree));
    EXPECT_EQ(t, mutate(mutate(s, 0), 1));
    EXPECT_TRUE(t.is_compatible());
    // Sources of the original quiver become sinks.
    EXPECT_EQ(bipartite_parts(t.exchange_matrix()).sinks(), (std::vector<int>{0, 1}));
}

TEST(SeedProperty, MutationMatchesMatrixForm) {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 200; ++it) {
        const int n = 1 + static_cast<int>(rng() % 4);
        Seed s = principal_seed(oracle::random_bipartite(rng, n, 3));
        for (int step = 0; step < 5; ++step) {
            const int k = static_cast<int>(rng() % n);
            const Seed t = mutate(s, k);
            EXPECT_EQ(t, oracle::mutate_matrix_form(s, k));
            s = t;
        }
    }
}

TEST(SeedProperty, InvolutionAndCompatibility) {
    std::mt19937_64 rng(32);
    for (int it = 0; it < 100; ++it) {
        const int n = 1 + static_cast<int>(rng() % 4);
        Seed s = principal_seed(oracle::random_bipartite(rng, n, 3));
        const int len = 1 + static_cast<int>(rng() % 8);
        for (int step = 0; step < len; ++step) {
            const int k = static_cast<int>(rng() % n);
            EXPECT_EQ(mutate(mutate(s, k), k), s);
            s = mutate(s, k);
            EXPECT_TRUE(s.is_compatible());
            EXPECT_TRUE(s.lambda->is_skew_symmetric());
        }
    }
}

TEST(Seed, RejectsBadMutationIndex) {
    const Seed s = principal_seed(kRankTwo);
    EXPECT_THROW(mutate(s, 2), DomainError);
    EXPECT_THROW(mutate(s, -1), DomainError);
}
