#include "chowring/int_linalg.hpp"
#include "property_checks.hpp"

#include <gtest/gtest.h>

#include <chrono>

using namespace chowring;

TEST(IntLinalg, SmithKnownExample) {
    IntMatrix M{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    SmithForm s = smith_normal_form(M);
    EXPECT_EQ(s.rank, 3u);
    EXPECT_EQ(s.diagonal, (std::vector<BigInt>{2, 6, 12}));
    EXPECT_EQ(checks::smith_properties(M), "");
}

TEST(IntLinalg, SmithRandom) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<int> dim(0, 7);
        IntMatrix M = checks::random_matrix(rng, dim(rng), dim(rng), trial % 3 ? 4 : 1000);
        EXPECT_EQ(checks::smith_properties(M), "");
        SmithForm s = smith_normal_form(M);
        EXPECT_EQ(s.rank, rank(M));
    }
}

TEST(IntLinalg, HermiteNormalForm) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix M = checks::random_matrix(rng, 5, 4, 9);
        IntMatrix H = hermite_normal_form(M);
        EXPECT_EQ(H.rows(), rank(M));
        std::size_t last = 0;
        for (std::size_t i = 0; i < H.rows(); ++i) {
            std::size_t p = 0;
            while (H(i, p) == 0) ++p;
            if (i) EXPECT_GT(p, last);
            last = p;
            EXPECT_GT(H(i, p), 0);
            for (std::size_t k = 0; k < i; ++k) EXPECT_TRUE(H(k, p) >= 0 && H(k, p) < H(i, p));
        }
        // same row lattice
        for (std::size_t i = 0; i < M.rows(); ++i) EXPECT_TRUE(in_row_lattice(H, M.row(i)));
        for (std::size_t i = 0; i < H.rows(); ++i) EXPECT_TRUE(in_row_lattice(M, H.row(i)));
    }
}

TEST(IntLinalg, NullspaceSaturated) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<int> dim(0, 8);
        IntMatrix M = checks::random_matrix(rng, dim(rng), dim(rng), trial % 2 ? 2 : 50);
        EXPECT_EQ(checks::nullspace_saturated(M), "");
    }
    // A non-saturated naive kernel: 2x = 2y has kernel (1,1), not (2,2).
    IntMatrix M{{2}, {-2}};
    IntMatrix N = integer_nullspace(M);
    ASSERT_EQ(N.rows(), 1u);
    EXPECT_EQ(abs_value(N(0, 0)), 1);
}

TEST(IntLinalg, NullspaceOfTallMatrixWithLargeEntriesStaysFast) {
    std::mt19937 rng(17);
    IntMatrix M = checks::random_matrix(rng, 40, 3, 30000000);
    auto start = std::chrono::steady_clock::now();
    EXPECT_EQ(checks::nullspace_saturated(M), "");
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 10.0);
}

TEST(IntLinalg, SolveLeft) {
    IntMatrix M{{7, 3, 1}, {5, 2, 1}, {2, 1, 1}};
    auto x = solve_left(M, IntVector{1, -1, -1});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(vec_times_matrix(*x, M), (IntVector{1, -1, -1}));
    IntMatrix E{{2, 0}, {0, 2}};
    EXPECT_FALSE(solve_left(E, IntVector{1, 0}).has_value());
    EXPECT_TRUE(solve_left(E, IntVector{4, -2}).has_value());
}

TEST(IntLinalg, DeterminantAndRank) {
    EXPECT_EQ(determinant(IntMatrix{{7, 3, 1}, {5, 2, 1}, {2, 1, 1}}), -1);
    EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
    EXPECT_EQ(rank(IntMatrix{{1, 2}, {2, 4}, {0, 1}}), 2u);
    EXPECT_THROW(determinant(IntMatrix(2, 3)), std::invalid_argument);
}
