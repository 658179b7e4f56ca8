#include "tistab/smallscale.h"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.h"

using namespace tistab;

namespace {

SymmetryModel ising() {
    return SymmetryModel::from_code(fixtures::ising());
}

SymmetryModel identity_model() {
    SymmetryModel m;
    m.dim = 2;
    m.matter_q = 1;
    m.eta = GeneratorMap::identity(2, 1);
    return m;
}

SymmetryModel unconstrained_model() {
    SymmetryModel m;
    m.dim = 1;
    m.matter_q = 1;
    m.eta = GeneratorMap::zero(1, 1, 0);
    return m;
}

PauliColumn flip() {
    return PauliColumn::single_x(2, 1, 0, {0, 0});
}

PauliColumn bond() {
    PauliColumn b = PauliColumn::identity(2, 1);
    b.z[0] = LaurentPoly::parse("1+x", 2);
    return b;
}

Eigen::VectorXd random_vector(size_t dim, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Eigen::VectorXd v{Eigen::Index(dim)};
    for (Eigen::Index i = 0; i < v.size(); i++) {
        v[i] = normal(rng);
    }
    return v;
}

}  // namespace

TEST(smallscale, lattice_layout_and_cap) {
    DenseLattice lat = make_lattice(ising(), TorusShape::cube(2, 2));
    EXPECT_EQ(lat.n_matter, 4u);
    EXPECT_EQ(lat.n_gauge, 8u);
    EXPECT_EQ(lat.num_qubits(), 12u);
    SymmetryModel fractal = ungauge_css(fixtures::cubic());
    EXPECT_THROW(make_lattice(fractal, TorusShape::cube(3, 2)), QubitCapError);
    EXPECT_THROW(check_lemma2(fractal, TorusShape::cube(3, 2)), QubitCapError);
    EXPECT_NO_THROW(make_lattice(fractal, TorusShape::cube(3, 2), 24));
}

TEST(smallscale, operators_are_involutions_and_projectors_idempotent) {
    SymmetryModel m = ising();
    DenseLattice lat = make_lattice(m, TorusShape::cube(2, 2));
    Eigen::VectorXd v = random_vector(lat.full_dim(), 1);
    std::vector<DensePauli> cons = constraint_paulis(m, lat);
    std::vector<DensePauli> flux = completed_flux_paulis(m, lat);
    std::vector<DensePauli> all = cons;
    all.insert(all.end(), flux.begin(), flux.end());
    for (const DensePauli &p : all) {
        EXPECT_LE((p.apply(p.apply(v)) - v).cwiseAbs().maxCoeff(), kConstructionTol);
        Eigen::VectorXd once = p.project(v);
        EXPECT_LE((p.project(once) - once).cwiseAbs().maxCoeff(), kConstructionTol);
        for (const DensePauli &q : all) {
            EXPECT_LE((p.apply(q.apply(v)) - q.apply(p.apply(v))).cwiseAbs().maxCoeff(), kConstructionTol);
        }
    }
}

TEST(smallscale, dense_masks) {
    DenseLattice lat = make_lattice(ising(), TorusShape::cube(2, 2));
    // Site (1,0) is index 2; bond 1+x wraps onto sites 0 and 2.
    EXPECT_EQ(dense_matter(lat, PauliColumn::single_x(2, 1, 0, {1, 0})).x, 1u << 2);
    EXPECT_EQ(dense_matter(lat, bond()).z, (1u << 0) | (1u << 2));
    PauliColumn g = PauliColumn::single_z(2, 3, 2, {0, 1});
    // Gauge type 1 at site 1: bit n_m + 1·2 + 1.
    EXPECT_EQ(dense_full(lat, g).z, 1u << 7);
}

TEST(smallscale, literal_G_matches_projector_application) {
    SymmetryModel m = ising();
    StateGaugingMap g = build_G(m, TorusShape::cube(2, 2));
    const DenseLattice &lat = g.lattice();
    EXPECT_EQ(g.scale(), 1.0);
    Eigen::VectorXd all_up = Eigen::VectorXd::Zero(Eigen::Index(lat.matter_dim()));
    all_up[0] = 1.0;
    Eigen::VectorXd direct = Eigen::VectorXd::Zero(Eigen::Index(lat.full_dim()));
    direct[0] = 1.0;
    for (const DensePauli &p : constraint_paulis(m, lat)) {
        direct = p.project(direct);
    }
    Eigen::VectorXd mapped = g.apply(all_up);
    EXPECT_LE((mapped - direct).cwiseAbs().maxCoeff(), kConstructionTol);
    // Four independent Gauss constraints.
    EXPECT_NEAR(mapped.squaredNorm(), 1.0 / 16.0, kConstructionTol);
    // Adjoint is the transpose.
    Eigen::VectorXd w = random_vector(lat.full_dim(), 2);
    Eigen::VectorXd u = random_vector(lat.matter_dim(), 3);
    EXPECT_NEAR(w.dot(g.apply(u)), g.adjoint(w).dot(u), 1e-10);
}

TEST(smallscale, unconstrained_model_projects_to_plus_states) {
    // Without Z constraints every X string is a symmetry, so the Gauss law
    // alone pins each matter qubit to |+>.
    SymmetryModel m = unconstrained_model();
    StateGaugingMap g = build_G(m, TorusShape({3}));
    Eigen::VectorXd zero = Eigen::VectorXd::Zero(8);
    zero[0] = 1.0;
    Eigen::VectorXd out = g.apply(zero);
    EXPECT_LE((out - Eigen::VectorXd::Constant(8, 1.0 / 8.0)).cwiseAbs().maxCoeff(), kConstructionTol);
    EXPECT_TRUE(check_lemma2(m, TorusShape({3})).passed);
}

TEST(smallscale, lemma2) {
    CheckReport r = check_lemma2(ising(), TorusShape::cube(2, 2));
    EXPECT_TRUE(r.passed) << r.str();
    CheckReport id = check_lemma2(identity_model(), TorusShape::cube(2, 2));
    EXPECT_TRUE(id.passed) << id.str();
    DenseLattice lat = make_lattice(identity_model(), TorusShape::cube(2, 2));
    EXPECT_LE((symmetric_projector(identity_model(), lat) - Eigen::MatrixXd::Identity(16, 16)).cwiseAbs().maxCoeff(),
              kConstructionTol);
}

TEST(smallscale, lemma3) {
    for (const PauliColumn &op : {flip(), bond(), PauliColumn::identity(2, 1), flip() * bond()}) {
        CheckReport r = check_lemma3(ising(), TorusShape::cube(2, 2), op);
        EXPECT_TRUE(r.passed) << r.str();
    }
}

TEST(smallscale, claim1) {
    for (const PauliColumn &op : {flip(), bond(), PauliColumn::identity(2, 1)}) {
        CheckReport r = check_claim1(ising(), TorusShape::cube(2, 2), op);
        EXPECT_TRUE(r.passed) << r.str();
    }
}

TEST(smallscale, non_symmetric_operator_refused) {
    PauliColumn z = PauliColumn::single_z(2, 1, 0, {0, 0});
    EXPECT_THROW(check_lemma3(ising(), TorusShape::cube(2, 2), z), NotSymmetricError);
    EXPECT_THROW(check_claim1(ising(), TorusShape::cube(2, 2), z), NotSymmetricError);
}

TEST(smallscale, matrix_elements) {
    CheckReport r = check_matrix_elements(ising(), TorusShape::cube(2, 2), flip(), 20, 7);
    EXPECT_TRUE(r.passed) << r.str();
    CheckReport b = check_matrix_elements(ising(), TorusShape::cube(2, 2), bond(), 20, 8);
    EXPECT_TRUE(b.passed) << b.str();
    Eigen::VectorXd e0 = Eigen::VectorXd::Zero(16);
    e0[0] = 1.0;
    EXPECT_THROW(check_matrix_element(ising(), TorusShape::cube(2, 2), flip(), e0, e0), std::invalid_argument);
}

TEST(smallscale, groundspace) {
    CheckReport completed = check_groundspace_span(ising(), TorusShape::cube(2, 2), FluxChoice::completed);
    EXPECT_TRUE(completed.passed) << completed.str();
    EXPECT_NE(completed.detail.find("ground dim 8, span rank 8"), std::string::npos) << completed.detail;
    // Plaquettes alone leave the two holonomy sectors unpinned.
    CheckReport local = check_groundspace_span(ising(), TorusShape::cube(2, 2), FluxChoice::local);
    EXPECT_FALSE(local.passed);
    EXPECT_NE(local.detail.find("assumption violated"), std::string::npos);
    EXPECT_NE(local.detail.find("ground dim 32"), std::string::npos) << local.detail;
    CheckReport id = check_groundspace_span(identity_model(), TorusShape::cube(2, 2), FluxChoice::local);
    EXPECT_TRUE(id.passed) << id.str();
}

TEST(smallscale, stabilized_dimension) {
    EXPECT_EQ(stabilized_dimension({}, 3), 8u);
    EXPECT_EQ(stabilized_dimension({{1, 0}, {0, 2}}, 2), 1u);
    EXPECT_EQ(stabilized_dimension({{3, 0}, {0, 3}}, 2), 1u);
    EXPECT_EQ(stabilized_dimension({{3, 0}, {3, 0}}, 2), 2u);
}

TEST(smallscale, transposed_torus_gives_same_reports) {
    for (const char *shape : {"2,3", "3,2"}) {
        TorusShape s = TorusShape::parse(shape);
        EXPECT_TRUE(check_lemma2(ising(), s).passed) << shape;
        EXPECT_TRUE(check_lemma3(ising(), s, bond()).passed) << shape;
    }
}

TEST(smallscale, check_list) {
    EXPECT_EQ(parse_check_list("all").size(), 5u);
    EXPECT_EQ(parse_check_list("lemma2,claim1"), (std::vector<std::string>{"lemma2", "claim1"}));
    EXPECT_THROW(parse_check_list("lemma5"), std::invalid_argument);
}
