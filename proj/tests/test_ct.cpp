#include "logct/ct.hpp"

#include <gtest/gtest.h>

using namespace logct;

namespace {

TPoly falling(long from, long to)
{
    TPoly acc(1);
    for (long i = from; i <= to; ++i) acc *= TPoly({Rational(-i), Rational(1)});
    return acc;
}

// Brute-force coefficient extraction: expand every factor over a generous box
// and multiply without pruning.
Rational brute_ct(const CTProblem& prob, long radius)
{
    const std::size_t n = prob.nvars;
    Window box(n, Interval{-radius, radius});
    SparseLaurent<Rational> acc = SparseLaurent<Rational>::monomial(ExpVec(n));
    for (auto f : prob.factors) {
        if (f.kind == FactorKind::OnePlusPower && prob.t_value) f.t_value = prob.t_value;
        acc = mul(acc, expand_factor<Rational>(f, box)).restrict_to(Window(n, Interval{-3 * radius, 3 * radius}));
    }
    return acc.coeff(prob.target);
}

}  // namespace

TEST(CT, FirstResidueExact)
{
    EXPECT_EQ(residue_F(1), TPoly({Rational(0), rat(1, 6), rat(1, 2), rat(1, 3)}));
}

TEST(CT, OracleEquivalence)
{
    for (long p : {1L, 3L, 5L}) EXPECT_EQ(residue_F(p), F_binomial_sum(p)) << "p=" << p;
}

TEST(CT, StrategyEquivalence)
{
    EngineOptions o;
    o.threads = 4;
    for (long p : {1L, 3L, 5L}) EXPECT_EQ(evaluate_symbolic(problem_F(p), o), interpolation_strategy(problem_F(p), o));
    for (long p : {1L, 3L}) {
        EXPECT_EQ(evaluate_symbolic(problem_E(0, p)), interpolation_strategy(problem_E(0, p)));
        EXPECT_EQ(evaluate_symbolic(problem_E(1, p)), interpolation_strategy(problem_E(1, p)));
    }
}

TEST(CT, PointEvaluationMatchesPolynomial)
{
    const TPoly F = residue_F(3);
    for (const Rational& t : {Rational(7), rat(1, 3), Rational(-11), rat(5, 2)}) EXPECT_EQ(residue_F_at(3, t), F(t));
}

TEST(CT, EngineMatchesBruteForceAtSmallPoints)
{
    for (long t : {0L, 2L, 5L}) EXPECT_EQ(evaluate_at(problem_F(1).at(t)), brute_ct(problem_F(1).at(t), 12)) << t;
    EXPECT_EQ(evaluate_at(problem_dyson(3, 1)), brute_ct(problem_dyson(3, 1), 6));
    EXPECT_EQ(evaluate_at(problem_log_dyson_cyclic(1)), brute_ct(problem_log_dyson_cyclic(1), 8));
}

TEST(CT, DegreeBounds)
{
    for (long p : {1L, 3L, 5L}) EXPECT_LE(residue_F(p).degree(), 6 * p - 3);
    for (long k : {0L, 1L})
        for (long p : {1L, 3L}) EXPECT_LE(residue_E(k, p).degree(), (2 * k + 1) * ((k + 1) * p - 1));
}

TEST(CT, EConsistency)
{
    for (long p : {1L, 3L, 5L}) {
        EXPECT_EQ(residue_E(1, p), residue_F(p));
        EXPECT_EQ(residue_E(0, p), binom_tpoly(0, p - 1));
    }
    EXPECT_EQ(residue_E(0, 7), binom_tpoly(0, 6));
}

TEST(CT, VanishingProperties)
{
    for (long p : {1L, 3L, 5L}) {
        const TPoly F = residue_F(p);
        for (long t = -p; t <= 2 * p - 2; ++t) EXPECT_EQ(F(t), 0) << p << ' ' << t;
        const TPoly dF = F.derivative();
        for (long t = 0; t <= p - 2; ++t) EXPECT_EQ(dF(t), 0);
        for (long i = 0; i <= 2 * p - 2; ++i) EXPECT_EQ(F(rat(-p, 2) + i), 0);
        EXPECT_EQ(F, -F.compose_affine(-1, p - 2));
        EXPECT_TRUE(divmod(F, falling(0, 2 * p - 2)).second.is_zero());
    }
}

TEST(CT, ClassicalDysonMagnitudes)
{
    const std::vector<std::array<long, 3>> cases{{2, 1, 2}, {2, 2, 6}, {3, 1, 6}, {3, 2, 90}, {4, 1, 24}};
    for (auto [n, m, expect] : cases) EXPECT_EQ(abs(dyson_ct(n, m)), expect) << n << ' ' << m;
}

TEST(CT, LogDysonValues)
{
    EXPECT_EQ(log_dyson_cyclic(1), -1);
    EXPECT_EQ(log_dyson_cyclic(3), rat(35, 3));
    EXPECT_EQ(log_dyson_cyclic(5), rat(-1001, 5));
    EXPECT_EQ(abs(log_dyson_vandermonde(1, 1)), rat(35, 3));
}

TEST(CT, ThreadCountInvariance)
{
    EngineOptions one, many;
    many.threads = 8;
    EXPECT_EQ(residue_F(5, one), residue_F(5, many));
    EXPECT_EQ(interpolation_strategy(problem_F(3), one), interpolation_strategy(problem_F(3), many));
}

TEST(CT, ResourceLimitsAbort)
{
    EngineOptions o;
    o.limits.max_terms = 50;
    EXPECT_THROW(residue_F(5, o), ResourceLimitExceeded);
    EngineOptions late;
    late.limits.deadline = std::chrono::steady_clock::now();
    EXPECT_THROW(residue_F(5, late), ResourceLimitExceeded);
}

TEST(CT, BothStrategyAgreesAndHashesAreStable)
{
    const auto r = evaluate(problem_F(3), Strategy::Both);
    EXPECT_EQ(std::get<TPoly>(r.value), F_binomial_sum(3));
    EXPECT_EQ(r.problem_hash, problem_hash(problem_F(3), kEngineVersion));
    EXPECT_NE(problem_hash(problem_F(3), kEngineVersion), problem_hash(problem_F(3), "other"));
    EXPECT_NE(problem_hash(problem_F(3), kEngineVersion), problem_hash(problem_F(3).at(2), kEngineVersion));
    EXPECT_EQ(r.problem_hash.size(), 64u);
}

TEST(CT, RejectsInvalidParameters)
{
    EXPECT_THROW(problem_F(2), std::invalid_argument);
    EXPECT_THROW(problem_F(-1), std::invalid_argument);
    EXPECT_THROW(problem_E(-1, 3), std::invalid_argument);
}
