#include "logct/identities.hpp"

#include <gtest/gtest.h>

using namespace logct;

TEST(Identities, ClosedFormFirstCase)
{
    // (1/3) t (t+1) (t+1/2) = t(t+1)(2t+1)/6
    const ClosedForm cf = closed_form_F(1);
    EXPECT_EQ(cf.constant, rat(1, 3));
    EXPECT_EQ(cf.polynomial(), TPoly({Rational(0), rat(1, 6), rat(1, 2), rat(1, 3)}));
    for (long t = -3; t <= 3; ++t) EXPECT_EQ(cf(t), cf.polynomial()(t));
}

TEST(Identities, PrintedAValues)
{
    EXPECT_EQ(printed_A(1), rat(1, 3));
    EXPECT_EQ(printed_A(3), rat(-160, 9009));
}

TEST(Identities, FitConstantRecoversPlantedConstant)
{
    const auto shape = half_step_factors(3, 3, 5);
    ClosedForm cf{rat(-7, 11), shape};
    auto [c, v] = fit_constant(cf.polynomial(), shape);
    EXPECT_EQ(v.status, Status::Verified);
    EXPECT_EQ(c, rat(-7, 11));
    // a perturbed polynomial leaves a remainder and names it
    auto [c2, v2] = fit_constant(cf.polynomial() + TPoly::t(), shape);
    EXPECT_EQ(v2.status, Status::Refuted);
    EXPECT_FALSE(v2.witness.empty());
    auto [c3, v3] = fit_constant(TPoly(), shape);
    EXPECT_EQ(v3.status, Status::Refuted);
}

TEST(Identities, SignedComparison)
{
    EXPECT_EQ(compare_signed(rat(2, 3), rat(2, 3)).status, Status::Verified);
    EXPECT_EQ(compare_signed(rat(-2, 3), rat(2, 3)).status, Status::VerifiedUpToSign);
    const auto bad = compare_signed(rat(1, 3), rat(2, 3));
    EXPECT_EQ(bad.status, Status::Refuted);
    EXPECT_FALSE(bad.witness.empty());
    EXPECT_FALSE(bad.ok(true));
    EXPECT_FALSE(compare_signed(rat(-2, 3), rat(2, 3)).ok(false));
    EXPECT_TRUE(compare_signed(rat(-2, 3), rat(2, 3)).ok(true));
}

TEST(Identities, Conjm1)
{
    for (long p : {1L, 3L, 5L}) {
        const Verdict v = verify_conjm1(p);
        EXPECT_TRUE(v.ok(true)) << p << ' ' << v.witness;
        ASSERT_TRUE(v.fitted_constant);
        EXPECT_EQ(abs(*v.fitted_constant), abs(printed_A(p)));
    }
}

TEST(Identities, WrongClosedFormIsRefuted)
{
    ClosedForm wrong = closed_form_F(3);
    wrong.factors.back().shift += 1;
    EXPECT_EQ(verify_against(residue_F(3), wrong).status, Status::Refuted);
}

TEST(Identities, EConjectureConsistency)
{
    for (long p : {1L, 3L, 5L, 7L}) {
        const Verdict v = verify_E_conjecture(0, p);
        EXPECT_EQ(v.status, Status::Verified);
        EXPECT_EQ(v.fitted_constant, Rational(1));
    }
    for (long p : {1L, 3L}) EXPECT_TRUE(same_outcome(verify_E_conjecture(1, p), verify_conjm1(p)));
}

TEST(Identities, ClosedFormAtSpecialPointHasCyclicMagnitude)
{
    for (long p : {1L, 3L, 5L}) EXPECT_EQ(abs(closed_form_F(p)(2 * p - 1)), log_dyson_cyclic_magnitude(p));
}

TEST(Identities, SpecialValueSignCandidates)
{
    int minus = 0, plus = 0;
    for (long p : {1L, 3L, 5L}) {
        const auto r = special_value_report(p);
        EXPECT_EQ(abs(r.computed), r.magnitude);
        EXPECT_NE(r.matches_plus_candidate, r.matches_minus_candidate);
        minus += r.matches_minus_candidate;
        plus += r.matches_plus_candidate;
    }
    EXPECT_TRUE((minus == 3) != (plus == 3));
}

TEST(Identities, LogDyson)
{
    for (long p : {1L, 3L, 5L}) EXPECT_TRUE(verify_log_dyson_cyclic(p).ok(true));
    for (auto [k, m] : std::vector<std::pair<long, long>>{{1, 0}, {1, 1}, {1, 2}}) EXPECT_TRUE(verify_log_dyson(k, m).ok()) << k << ' ' << m;
    EXPECT_EQ(log_dyson_magnitude(1, 1), rat(35, 3));
}

TEST(Identities, Dyson)
{
    for (auto [n, m] : std::vector<std::pair<long, long>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}}) EXPECT_TRUE(verify_dyson(n, m).ok());
    EXPECT_EQ(verdict_dyson(Rational(91), 3, 2).status, Status::Refuted);
}

TEST(Identities, ChuFu)
{
    for (long m = 0; m <= 6; ++m) {
        const auto c = chu_fu(m);
        EXPECT_EQ(c.verdict.status, Status::Verified) << m;
        EXPECT_EQ(c.lhs, c.rhs);
    }
}

TEST(Identities, HarmonicCk)
{
    for (long p : {1L, 3L, 5L, 7L})
        for (long k = 0; k <= p; ++k) EXPECT_EQ(harmonic_Ck(p, k).verdict.status, Status::Verified) << p << ' ' << k;
}

TEST(Identities, Vanishing)
{
    for (long p : {1L, 3L, 5L}) EXPECT_EQ(verify_vanishing(p).status, Status::Verified);
    // a polynomial lacking the factor t is caught
    EXPECT_EQ(verdict_vanishing(TPoly({Rational(1), Rational(1)}), 3).status, Status::Refuted);
}
