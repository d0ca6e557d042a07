#include "logct/spectrum.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace logct;

TEST(Spectrum, CentralCharge)
{
    EXPECT_EQ(central_charge(2, 3), 0);
    EXPECT_EQ(central_charge(2, 5), rat(-22, 5));
    for (long p : {3L, 5L, 7L, 9L}) EXPECT_EQ(central_charge(2, p), 1 - 3 * Rational((p - 2) * (p - 2), p));
    EXPECT_THROW(central_charge(2, 4), std::invalid_argument);
}

TEST(Spectrum, WeightSymmetries)
{
    for (long p : {3L, 5L, 7L})
        for (long r = -4; r <= 4; ++r)
            for (long s = -6; s <= 6; ++s) {
                EXPECT_EQ(h_rs(p, r, s), h_rs(p, -r, -s));
                EXPECT_EQ(h_rs(p, r, s), h_rs(p, r + 2, s + p));
            }
    EXPECT_EQ(h_rs(3, 1, 1), 0);
    EXPECT_EQ(h_rs(3, 2, 3), rat(-1, 24));
    EXPECT_EQ(h_rs(3, 3, 2), 1);
}

TEST(Spectrum, LinearFactorReading)
{
    EXPECT_EQ(zhu_linear_root(3), rat(-1, 24));
    EXPECT_EQ(zhu_linear_root_as_printed(3), 1);
    for (long p : {3L, 5L, 7L}) EXPECT_EQ(zhu_linear_root(p), -Rational((p - 2) * (p - 2), 8 * p));
}

TEST(Spectrum, FactoredPolyMergesRoots)
{
    FactoredPoly f(rat(2));
    f.add_root(1);
    f.add_root(1, 2);
    f.add_root(rat(-1, 2));
    EXPECT_EQ(f.multiplicity(1), 3);
    EXPECT_EQ(f.degree(), 4);
    const TPoly e = f.expand();
    EXPECT_EQ(e(1), 0);
    EXPECT_EQ(e(rat(-1, 2)), 0);
    EXPECT_EQ(e.leading(), 2);
    EXPECT_THROW(f.add_root(0, 0), std::invalid_argument);
}

TEST(Spectrum, ZhuWAtThree)
{
    const auto f = zhu_poly_W(3);
    EXPECT_EQ(f.degree(), 20);
    EXPECT_TRUE(f.same_roots(zhu_poly_W3_printed()));
    EXPECT_TRUE(f.same_roots(zhu_poly_W_first_form(3)));
    EXPECT_EQ(verify_zhu_w(3).status, Status::Verified);
}

TEST(Spectrum, ZhuSingletAtThree)
{
    const auto f = zhu_poly_singlet(3);
    EXPECT_EQ(f.degree(), 15);
    EXPECT_TRUE(f.same_roots(zhu_poly_singlet3_printed()));
    EXPECT_EQ(f.multiplicity(0), 4);
    EXPECT_EQ(verify_zhu_singlet(3).status, Status::Verified);
}

TEST(Spectrum, CountsAndDegrees)
{
    EXPECT_EQ(counts(3).irreducible, 13);
    EXPECT_EQ(counts(3).character_dim, 20);
    for (long p : {3L, 5L, 7L, 9L}) {
        EXPECT_EQ(counts(p).irreducible, 4 * p + (p - 1) / 2);
        EXPECT_EQ(zhu_poly_W(p).degree(), counts(p).character_dim);
        EXPECT_EQ(static_cast<long>(module_table(p).entries.size()), counts(p).irreducible);
        EXPECT_EQ(verify_zhu_w(p).status, Status::Verified);
        EXPECT_EQ(zhu_poly_singlet(p).degree(), 6 * p - 3);
    }
    EXPECT_THROW(counts(4), std::invalid_argument);
}

TEST(Spectrum, ModuleTableAtThree)
{
    const auto t = module_table(3);
    EXPECT_FALSE(t.dimensions_extrapolated);
    ASSERT_EQ(t.entries.size(), 13u);
    std::set<Rational> one, two;
    for (const auto& e : t.entries) (e.top_dimension == 1 ? one : two).insert(e.lowest_weight);
    EXPECT_EQ(one, s23_one_dimensional());
    EXPECT_EQ(two, s23_two_dimensional());
    // every weight in the table is a root of f(x)
    const auto f = zhu_poly_W(3);
    for (const auto& e : t.entries) EXPECT_GT(f.multiplicity(e.lowest_weight), 0) << e.label;
    EXPECT_TRUE(module_table(5).dimensions_extrapolated);
}
