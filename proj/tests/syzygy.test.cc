#include "tistab/syzygy.h"

#include <gtest/gtest.h>

#include "fixtures.h"

using namespace tistab;

namespace {

GeneratorMap ising_eta() {
    return GeneratorMap::parse(2, {{"1+y", "1+x"}});
}

GeneratorMap fractal_eta() {
    return dagger(fixtures::cubic().sigma_x());
}

}  // namespace

TEST(syzygy, ising_kernel_is_plaquette) {
    KernelBasis k = bounded_kernel(ising_eta(), default_box(ising_eta()));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_TRUE(compose(ising_eta(), k.generators).is_zero());
    EXPECT_TRUE(equal_up_to_translation(k.generators, GeneratorMap::parse(2, {{"1+x"}, {"1+y"}}), true));
}

TEST(syzygy, fractal_kernel_is_cubic_z) {
    GeneratorMap eta = fractal_eta();
    KernelBasis k = bounded_kernel(eta, default_box(eta));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_TRUE(compose(eta, k.generators).is_zero());
    EXPECT_TRUE(equal_up_to_translation(k.generators, fixtures::cubic().sigma_z(), true));
}

TEST(syzygy, injective_map_has_no_kernel) {
    EXPECT_EQ(bounded_kernel(GeneratorMap::identity(2, 2), {2, 2}).size(), 0u);
    EXPECT_EQ(bounded_kernel(GeneratorMap::parse(2, {{"1+x"}}), {3, 3}).size(), 0u);
}

TEST(syzygy, bad_arguments) {
    EXPECT_THROW(bounded_kernel(ising_eta(), {1}), std::invalid_argument);
    EXPECT_THROW(bounded_kernel(ising_eta(), {1, -1}), std::invalid_argument);
}

TEST(syzygy, more_box_never_loses_generators) {
    GeneratorMap eta = ising_eta();
    KernelBasis small = bounded_kernel(eta, {1, 1});
    KernelBasis big = bounded_kernel(eta, {2, 2});
    EXPECT_GE(big.size(), small.size());
    TorusShape s = TorusShape::cube(2, 6);
    EXPECT_GE(certify_on_torus(big, s).span_dim, certify_on_torus(small, s).span_dim);
}

TEST(syzygy, certification_deficit_is_homology) {
    // The plaquettes span everything but the two non-contractible loops.
    KernelBasis k = bounded_kernel(ising_eta(), {1, 1});
    CertificationReport r = certify_on_torus(k, TorusShape::cube(2, 4));
    EXPECT_TRUE(r.contained);
    EXPECT_TRUE(r.locally_complete);
    EXPECT_EQ(r.kernel_dim, 17u);
    EXPECT_EQ(r.deficit, 2u);
    EXPECT_FALSE(r.passed());
    EXPECT_TRUE(k.certified_tori.empty());

    GeneratorMap eta = fractal_eta();
    KernelBasis f = bounded_kernel(eta, default_box(eta));
    CertificationReport rf = certify_on_torus(f, TorusShape::cube(3, 4));
    EXPECT_TRUE(rf.locally_complete);
    EXPECT_EQ(rf.deficit, 14u);
}

TEST(syzygy, trivial_certification_passes) {
    // Kernel of the zero map on one coordinate: the unit vector, nothing global missing.
    GeneratorMap m = GeneratorMap::zero(1, 1, 1);
    KernelBasis k = bounded_kernel(m, {1});
    ASSERT_EQ(k.size(), 1u);
    CertificationReport r = certify_on_torus(k, TorusShape({5}));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(k.certified_tori.size(), 1u);
}

TEST(syzygy, deleted_generator_fails_locally) {
    GeneratorMap eta = ising_eta();
    KernelBasis k = bounded_kernel(eta, {1, 1});
    k.generators = GeneratorMap::zero(2, 2, 0);
    CertificationReport r = certify_on_torus(k, TorusShape::cube(2, 4));
    EXPECT_FALSE(r.locally_complete);
    EXPECT_EQ(r.span_dim, 0u);
    EXPECT_FALSE(r.passed());
}

TEST(syzygy, torus_too_small) {
    KernelBasis k = bounded_kernel(ising_eta(), {1, 1});
    EXPECT_THROW(certify_on_torus(k, TorusShape::cube(2, 2)), std::invalid_argument);
}

TEST(syzygy, preimage) {
    GeneratorMap eta = ising_eta();
    auto s = preimage(eta, {LaurentPoly::parse("x^2+x^2*y", 2)});
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(*s, (std::vector<LaurentPoly>{LaurentPoly::parse("x^2", 2), LaurentPoly(2)}));
    // A single Z is not a product of bonds.
    EXPECT_FALSE(preimage(eta, {LaurentPoly::one(2)}).has_value());
    auto zero = preimage(eta, {LaurentPoly(2)});
    ASSERT_TRUE(zero.has_value());
    EXPECT_TRUE(zero->at(0).is_zero() && zero->at(1).is_zero());
}
