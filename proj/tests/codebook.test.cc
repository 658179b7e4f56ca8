#include "tistab/codebook.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "oracle.h"
#include "tistab/torus.h"

using namespace tistab;

TEST(codebook, names_resolve_and_commute) {
    for (const std::string &name : codebook_names()) {
        if (name == "generalized_toric(d,k)") {
            continue;
        }
        CodeSpec c = get_code(name);
        EXPECT_NO_THROW(c.validate()) << name;
        EXPECT_TRUE(verify_stabilizer(c).commuting) << name;
    }
    for (size_t d = 1; d <= 3; d++) {
        for (size_t k = 0; k <= d; k++) {
            EXPECT_TRUE(verify_stabilizer(generalized_toric(d, k)).commuting) << d << "," << k;
        }
    }
}

TEST(codebook, exact_generators) {
    EXPECT_EQ(get_code("toric2d").sigma, fixtures::toric().sigma);
    EXPECT_EQ(get_code("cubic").sigma, fixtures::cubic().sigma);
    EXPECT_EQ(get_code("ising2d").sigma, fixtures::ising().sigma);
    CodeSpec f = get_code("fractal_ising");
    EXPECT_EQ(f.sigma_z(), GeneratorMap::parse(3, {{"1+xy+xz+yz", "x+z+xz+xyz"}}));
    EXPECT_FALSE(get_code("cluster_toric").css);
    EXPECT_EQ(get_code("cluster_cubic").q, 3u);
}

TEST(codebook, generalized_toric_2_1_is_toric) {
    CodeSpec g = get_code("generalized_toric(2,1)");
    EXPECT_TRUE(equal_up_to_translation(g.sigma_x(), fixtures::toric().sigma_x(), true));
    EXPECT_TRUE(equal_up_to_translation(g.sigma_z(), fixtures::toric().sigma_z(), true));
}

TEST(codebook, generalized_toric_3_1_against_oracle) {
    CodeSpec g = generalized_toric(3, 1);
    for (int L : {2, 3}) {
        size_t n = size_t(3 * L * L * L);
        size_t expected = oracle::encoded_qubits(oracle::toric3d_stabilizers(L), n);
        CountReport r = count_logical(g, TorusShape({L, L, L}));
        EXPECT_EQ(expected, 3u);
        EXPECT_EQ(r.k_encoded, expected) << L;
    }
}

TEST(codebook, generalized_toric_shapes) {
    CodeSpec g = generalized_toric(4, 2);
    EXPECT_EQ(g.q, 6u);
    EXPECT_EQ(g.n_x, 4u);
    EXPECT_EQ(g.num_generators(), 8u);
    EXPECT_EQ(generalized_toric(3, 0).n_x, 0u);
    EXPECT_EQ(generalized_toric(3, 3).num_generators(), 3u);
}

TEST(codebook, errors) {
    EXPECT_THROW(get_code("nope"), std::invalid_argument);
    EXPECT_THROW(get_code("generalized_toric(2,3)"), std::invalid_argument);
    EXPECT_THROW(get_code("generalized_toric(0,0)"), std::invalid_argument);
    EXPECT_THROW(get_code("generalized_toric(2,1"), std::invalid_argument);
}
