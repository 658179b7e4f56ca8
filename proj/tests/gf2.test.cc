#include "tistab/gf2.h"

#include <gtest/gtest.h>

#include "oracle.h"

using namespace tistab;

namespace {

Gf2Matrix from_oracle(const oracle::Rows &rows) {
    Gf2Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); r++) {
        for (size_t c = 0; c < rows[r].size(); c++) {
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

}  // namespace

TEST(gf2, rank_basics) {
    EXPECT_EQ(rank(Gf2Matrix::identity(70)), 70u);
    EXPECT_EQ(rank(Gf2Matrix(5, 9)), 0u);
    EXPECT_EQ(rank(Gf2Matrix(0, 0)), 0u);
}

TEST(gf2, toric_2x2_stabilizers) {
    oracle::Rows rows = oracle::toric_stabilizers(2);
    ASSERT_EQ(rows.size(), 8u);
    EXPECT_EQ(oracle::naive_rank(rows), 6u);
    EXPECT_EQ(rank(from_oracle(rows)), 6u);
}

TEST(gf2, nullspace_basics) {
    EXPECT_TRUE(nullspace(Gf2Matrix::identity(4)).empty());
    auto ns = nullspace(Gf2Matrix::from_strings({"11"}));
    ASSERT_EQ(ns.size(), 1u);
    EXPECT_EQ(ns[0].str(), "11");
}

TEST(gf2, solve_basics) {
    BitVec b = BitVec::from_string("1011");
    EXPECT_EQ(solve(Gf2Matrix::identity(4), b), b);
    EXPECT_FALSE(solve(Gf2Matrix::from_strings({"11", "00"}), BitVec::from_string("01")).has_value());
    auto x = solve(Gf2Matrix::from_strings({"11"}), BitVec::from_string("1"));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(x->str(), "10");
    EXPECT_THROW(solve(Gf2Matrix::identity(3), BitVec(2)), std::invalid_argument);
}

TEST(gf2, random_against_oracle) {
    uint64_t seed = 1;
    for (size_t rows : {1, 7, 63, 64, 65, 130}) {
        for (size_t cols : {1, 5, 64, 100, 129}) {
            for (double density : {0.05, 0.5}) {
                oracle::Rows o = oracle::random_rows(rows, cols, density, seed++);
                Gf2Matrix m = from_oracle(o);
                size_t r = rank(m);
                ASSERT_EQ(r, oracle::naive_rank(o));
                ASSERT_EQ(rank(m.transpose()), r);
                auto ns = nullspace(m);
                ASSERT_EQ(ns.size(), cols - r);
                for (const auto &v : ns) {
                    ASSERT_FALSE(m.multiply(v).any());
                }
                if (!ns.empty()) {
                    ASSERT_EQ(span_rank(ns, cols), ns.size());
                }
            }
        }
    }
}

TEST(gf2, rank_transpose_large) {
    for (uint64_t seed : {3u, 4u}) {
        oracle::Rows o = oracle::random_rows(512, 512, 0.5, seed);
        Gf2Matrix m = from_oracle(o);
        // Force a rank deficiency: row 511 = row 0 + row 1.
        for (size_t c = 0; c < 512; c++) {
            m.set(511, c, m.get(0, c) ^ m.get(1, c));
        }
        size_t r = rank(m);
        EXPECT_LE(r, 511u);
        EXPECT_EQ(rank(m.transpose()), r);
    }
}

TEST(gf2, solve_random_consistent) {
    for (uint64_t seed = 20; seed < 40; seed++) {
        oracle::Rows o = oracle::random_rows(40, 70, 0.3, seed);
        Gf2Matrix m = from_oracle(o);
        BitVec x0(70);
        for (size_t k = 0; k < 70; k += 3) {
            x0.set(k, true);
        }
        BitVec b = m.multiply(x0);
        auto x = solve(m, b);
        ASSERT_TRUE(x.has_value());
        ASSERT_EQ(m.multiply(*x), b);
    }
}

TEST(gf2, multiply_and_stack) {
    Gf2Matrix a = Gf2Matrix::from_strings({"110", "011"});
    Gf2Matrix b = Gf2Matrix::from_strings({"10", "11", "01"});
    EXPECT_EQ(a.multiply(b).str(), "01\n10\n");
    EXPECT_EQ(a.vstack(Gf2Matrix::identity(3)).rows(), 5u);
    EXPECT_EQ(a.transpose().str(), "10\n11\n01\n");
    EXPECT_EQ(Gf2Matrix::from_columns({a.column(2), a.column(0)}, 2).str(), "01\n10\n");
}
