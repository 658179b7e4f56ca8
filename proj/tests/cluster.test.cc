#include "tistab/cluster.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "oracle.h"

using namespace tistab;

namespace {

ClusterSpec toric_cluster() {
    return build_cluster(ungauge_css(fixtures::toric()));
}

ClusterSpec cubic_cluster() {
    return build_cluster(ungauge_css(fixtures::cubic()));
}

ClusterSpec chain_cluster(size_t dim) {
    SymmetryModel m;
    m.dim = dim;
    m.matter_q = 1;
    m.eta = GeneratorMap::identity(dim, 1);
    return build_cluster(m);
}

// Dimension of the pure-X operators on qubits [begin, begin + count) of each
// site commuting with every stabilizer translate, by brute force on bits.
size_t brute_symmetry_dim(const ClusterSpec &c, const TorusShape &shape, size_t begin, size_t count) {
    const size_t n = shape.num_sites();
    const size_t q = c.num_qubits();
    oracle::Rows rows;
    for (size_t site = 0; site < n; site++) {
        Exponent shift = shape.site_coords(site);
        for (const PauliColumn &s : c.stabilizers) {
            std::vector<uint8_t> row(count * n, 0);
            for (size_t k = 0; k < count; k++) {
                for (const Exponent &e : s.z[begin + k].terms()) {
                    row[shape.site_index(e + shift) * count + k] ^= 1;
                }
            }
            rows.push_back(row);
        }
    }
    (void)q;
    return count * n - oracle::naive_rank(rows);
}

}  // namespace

TEST(cluster, models_commute) {
    for (const ClusterSpec &c : {toric_cluster(), cubic_cluster(), chain_cluster(1), chain_cluster(3)}) {
        EXPECT_TRUE(verify_stabilizer(c.to_code("c")).commuting);
    }
}

TEST(cluster, toric_gauge_terms_as_drawn) {
    ClusterSpec c = toric_cluster();
    ASSERT_EQ(c.matter_q, 1u);
    ASSERT_EQ(c.gauge_q, 2u);
    // Red XI with blue Z to its upper and lower left; red IX with blue Z below.
    EXPECT_EQ(render_diagram(c.stabilizers[1]), "ZII IXI\nZII III");
    EXPECT_EQ(render_diagram(c.stabilizers[2]), "III IIX\nZII ZII");
    EXPECT_EQ(render_diagram(c.stabilizers[0]), "IIZ IZZ\nXII IZI");
}

TEST(cluster, cubic_matter_term_is_reflected_cubic_z) {
    // The blue term carries Z in the pattern of σ_X; reflected through the
    // origin with the two red qubits exchanged it is the cubic Z generator.
    ClusterSpec c = cubic_cluster();
    const PauliColumn &s = c.stabilizers[0];
    GeneratorMap z = GeneratorMap::from_columns(3, 2, {{s.z[2].antipode(), s.z[1].antipode()}});
    EXPECT_TRUE(equal_up_to_translation(z, fixtures::cubic().sigma_z(), false));
}

TEST(cluster, identity_chain) {
    ClusterSpec c = chain_cluster(1);
    ASSERT_EQ(c.stabilizers.size(), 2u);
    EXPECT_EQ(render_diagram(c.stabilizers[0]), "XZ");
    EXPECT_EQ(render_diagram(c.stabilizers[1]), "ZX");
}

TEST(cluster, cz_layer_disentangles) {
    for (const ClusterSpec &c : {toric_cluster(), cubic_cluster(), chain_cluster(2)}) {
        EXPECT_TRUE(sre_witness(c));
    }
    ClusterSpec c = toric_cluster();
    c.stabilizers[0].z[1] += LaurentPoly::one(2);
    EXPECT_FALSE(sre_witness(c));
}

TEST(cluster, inherited_symmetries) {
    struct Case {
        ClusterSpec c;
        TorusShape shape;
    };
    for (const Case &k : {Case{toric_cluster(), TorusShape::cube(2, 4)}, Case{cubic_cluster(), TorusShape::cube(3, 4)},
                          Case{chain_cluster(2), TorusShape::cube(2, 3)}}) {
        SymmetryReport r = inherited_symmetries(k.c, k.shape);
        EXPECT_TRUE(r.matches()) << r.str();
        EXPECT_EQ(r.matter_dim, brute_symmetry_dim(k.c, k.shape, 0, k.c.matter_q));
        EXPECT_EQ(r.gauge_dim, brute_symmetry_dim(k.c, k.shape, k.c.matter_q, k.c.gauge_q));
    }
    SymmetryReport t = inherited_symmetries(toric_cluster(), TorusShape::cube(2, 4));
    EXPECT_EQ(t.matter_dim, 1u);
    // Closed loops on a 4x4 torus: 16 + 1.
    EXPECT_EQ(t.gauge_dim, 17u);
    EXPECT_EQ(t.gauge_flux_count, 17u);
    SymmetryReport chain = inherited_symmetries(chain_cluster(2), TorusShape::cube(2, 3));
    EXPECT_EQ(chain.matter_dim, 0u);
    EXPECT_EQ(chain.gauge_dim, 0u);
}

TEST(cluster, gauging_matter_gives_toric_code_after_cz) {
    ClusterSpec c = toric_cluster();
    CodeSpec g = gauge_sublattice(c, Sublattice::matter);
    ASSERT_EQ(g.q, 4u);
    EXPECT_TRUE(verify_stabilizer(g).commuting);
    // CZ between each old gauge qubit and its partner: old qubits become bare
    // X terms, partners carry the toric code.
    GaugingComplex toric = gauge(ungauge_css(fixtures::toric()));
    GeneratorMap partners_x = GeneratorMap::zero(2, 2, 0);
    GeneratorMap partners_z = GeneratorMap::zero(2, 2, 0);
    size_t bare = 0;
    for (size_t i = 0; i < g.num_generators(); i++) {
        PauliColumn op = cz_layer(g.generator(i), GeneratorMap::identity(2, 2), 0, 2);
        bool old_only = op.x[2].is_zero() && op.x[3].is_zero() && op.z[2].is_zero() && op.z[3].is_zero();
        bool new_only = op.x[0].is_zero() && op.x[1].is_zero() && op.z[0].is_zero() && op.z[1].is_zero();
        if (old_only) {
            EXPECT_TRUE(op.z[0].is_zero() && op.z[1].is_zero());
            bare++;
            continue;
        }
        ASSERT_TRUE(new_only);
        GeneratorMap x = GeneratorMap::from_columns(2, 2, {{op.x[2], op.x[3]}});
        GeneratorMap z = GeneratorMap::from_columns(2, 2, {{op.z[2], op.z[3]}});
        if (z.is_zero()) {
            partners_x = partners_x.hstack(x);
        } else {
            ASSERT_TRUE(x.is_zero());
            partners_z = partners_z.hstack(z);
        }
    }
    EXPECT_EQ(bare, 2u);
    EXPECT_TRUE(equal_up_to_translation(partners_x, toric.code.sigma_x(), true));
    EXPECT_TRUE(equal_up_to_translation(partners_z, toric.code.sigma_z(), true));
}

TEST(cluster, gauging_gauge_sublattice_commutes) {
    for (const ClusterSpec &c : {toric_cluster(), cubic_cluster()}) {
        CodeSpec g = gauge_sublattice(c, Sublattice::gauge);
        EXPECT_EQ(g.q, 2 * c.matter_q);
        EXPECT_TRUE(verify_stabilizer(g).commuting);
    }
}

TEST(cluster, self_duality) {
    for (const ClusterSpec &c : {toric_cluster(), cubic_cluster(), chain_cluster(1), chain_cluster(3)}) {
        SelfDualityReport r = self_duality_check(c);
        EXPECT_TRUE(r.passed()) << r.str();
    }
}

TEST(cluster, identity_chain_single_sublattice_is_self_dual) {
    ClusterSpec c = chain_cluster(1);
    for (Sublattice which : {Sublattice::matter, Sublattice::gauge}) {
        CodeSpec g = gauge_sublattice(c, which);
        // Identity constraint map: the partner simply replaces the gauged qubit.
        EXPECT_TRUE(equal_up_to_translation(g.sigma, c.to_code("c").sigma, true) ||
                    equal_up_to_translation(g.sigma, swap_sectors(c.to_code("c").sigma), true));
    }
}

TEST(cluster, parse_sublattice) {
    EXPECT_EQ(parse_sublattice("both"), Sublattice::both);
    EXPECT_THROW(parse_sublattice("red"), std::invalid_argument);
}
