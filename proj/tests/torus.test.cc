#include "tistab/torus.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "oracle.h"

using namespace tistab;

TEST(torus, shape) {
    TorusShape s = TorusShape::parse("3,4");
    EXPECT_EQ(s.num_sites(), 12u);
    EXPECT_EQ(s.site_index({1, 2}), 6u);
    EXPECT_EQ(s.site_index({-2, 6}), 6u);
    EXPECT_EQ(s.site_coords(6), (Exponent{1, 2}));
    EXPECT_EQ(s.str(), "3,4");
    EXPECT_THROW(TorusShape::parse("1,4"), std::invalid_argument);
    EXPECT_THROW(TorusShape::parse("4,,4"), std::invalid_argument);
    EXPECT_THROW(TorusShape::parse(""), std::invalid_argument);
}

TEST(torus, identity_instantiates_to_identity) {
    TorusShape s = TorusShape::cube(2, 3);
    Gf2Matrix m = instantiate(GeneratorMap::identity(2, 2), s);
    EXPECT_EQ(m.str(), Gf2Matrix::identity(18).str());
}

TEST(torus, instantiation_respects_composition) {
    CodeSpec c = fixtures::cubic();
    TorusShape s = TorusShape::cube(3, 3);
    Gf2Matrix eps = instantiate(epsilon_of(c.sigma), s);
    Gf2Matrix sig = instantiate(c.sigma, s);
    EXPECT_TRUE(eps.multiply(sig).is_zero());
    GeneratorMap a = GeneratorMap::parse(3, {{"1+x", "y^-1"}, {"xz", "0"}});
    GeneratorMap b = GeneratorMap::parse(3, {{"z+x^-1*y"}, {"1+y+z"}});
    EXPECT_EQ(instantiate(a, s).multiply(instantiate(b, s)).str(), instantiate(compose(a, b), s).str());
}

TEST(torus, toric_code_against_geometric_oracle) {
    for (int L = 2; L <= 6; L++) {
        TorusShape s = TorusShape::cube(2, L);
        CountReport r = count_logical(fixtures::toric(), s);
        oracle::Rows rows = oracle::toric_stabilizers(L);
        EXPECT_EQ(r.k_encoded, oracle::encoded_qubits(rows, size_t(2 * L * L))) << "L=" << L;
        EXPECT_EQ(r.k_encoded, 2u);
        EXPECT_EQ(r.n_qubits, size_t(2 * L * L));
        EXPECT_EQ(r.bulk_term, 0);
        EXPECT_EQ(r.c_constant, 2);
        EXPECT_TRUE(r.consistent());
    }
}

TEST(torus, cubic_code_against_geometric_oracle) {
    const std::pair<int, size_t> expected[] = {{2, 6}, {3, 2}, {4, 14}};
    for (auto [L, k] : expected) {
        TorusShape s = TorusShape::cube(3, L);
        CountReport r = count_logical(fixtures::cubic(), s);
        oracle::Rows rows = oracle::cubic_stabilizers(L, fixtures::kCubicX1, fixtures::kCubicX2, fixtures::kCubicZ1,
                                                      fixtures::kCubicZ2);
        EXPECT_EQ(oracle::encoded_qubits(rows, size_t(2 * L * L * L)), k);
        EXPECT_EQ(r.k_encoded, k) << "L=" << L;
        EXPECT_EQ(r.bulk_term, 0);
        EXPECT_TRUE(r.consistent());
    }
}

TEST(torus, ising_counts) {
    CountReport r = count_logical(fixtures::ising(), TorusShape::cube(2, 5));
    EXPECT_EQ(r.k_encoded, 1u);
    EXPECT_EQ(r.inputs.rank_z, 1u);
    EXPECT_EQ(r.bulk_term, 0);
    EXPECT_EQ(r.c_constant, 1);
}

TEST(torus, bulk_term_counts_free_qubits) {
    // A single Z per site pins every qubit; two Z-free qubits per site stay logical.
    CodeSpec c = CodeSpec::make_css("partial", GeneratorMap::zero(1, 3, 0), GeneratorMap::parse(1, {{"1"}, {"0"}, {"0"}}));
    CountReport r = count_logical(c, TorusShape({7}));
    EXPECT_EQ(r.k_encoded, 14u);
    EXPECT_EQ(r.bulk_term, 14);
    EXPECT_EQ(r.c_constant, 0);
}

TEST(torus, non_commuting_code_is_refused) {
    CodeSpec bad = CodeSpec::make_css("bad", GeneratorMap::parse(2, {{"x+xy"}, {"y+xy"}}),
                                      GeneratorMap::parse(2, {{"1+x"}, {"1+x"}}));
    EXPECT_THROW(count_logical(bad, TorusShape::cube(2, 4)), std::invalid_argument);
}

TEST(torus, logical_operator_gap) {
    for (int L : {3, 4}) {
        GapReport g = logical_operator_gap(fixtures::toric(), TorusShape::cube(2, L));
        oracle::Rows rows = oracle::toric_stabilizers(L);
        size_t n = size_t(2 * L * L);
        EXPECT_EQ(g.dim_ker_eps, oracle::centralizer_dim(rows, n));
        EXPECT_EQ(g.gap, 4);
        EXPECT_EQ(g.k_encoded, 2u);
        EXPECT_TRUE(g.consistent);
    }
    GapReport c = logical_operator_gap(fixtures::cubic(), TorusShape::cube(3, 3));
    EXPECT_EQ(c.gap, 4);
    EXPECT_TRUE(c.consistent);
    // X on every site alone: the stabilizers already span their centralizer.
    CodeSpec x_only = CodeSpec::make("x", 1, GeneratorMap::parse(1, {{"1"}, {"0"}}));
    EXPECT_EQ(logical_operator_gap(x_only, TorusShape({2})).gap, 0);
}
