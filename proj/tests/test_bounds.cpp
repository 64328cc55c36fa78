#include "bettikit/bounds.hpp"
#include "bettikit/errors.hpp"
#include "bettikit/pure.hpp"
#include "bettikit/table_io.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace bettikit;

namespace {

ModuleStats fixture_stats()
{
    return stats(load_table_file(BETTIKIT_DATA_DIR "/eight_variable_example.txt"));
}

/// Stats of the three-generated ideal I (as a module) in five variables.
ModuleStats three_generated_ideal()
{
    ModuleStats s;
    s.t = {11, 12, 13, std::nullopt, std::nullopt};
    s.dmin = {11, 12, 13, std::nullopt, std::nullopt};
    s.p = 4;
    s.reg = 11;
    s.mu = 3;
    return s;
}

ModuleStats cyclic_stats(std::vector<int> t)
{
    ModuleStats s;
    for (int v : t) {
        s.t.emplace_back(v);
        s.dmin.emplace_back(v);
    }
    s.p = static_cast<int>(t.size()) - 1;
    s.reg = 0;
    for (int i = 0; i <= s.p; ++i)
        s.reg = std::max(s.reg, t[static_cast<std::size_t>(i)] - i);
    s.mu = 1;
    return s;
}

}  // namespace

TEST(T1, EightVariableFixture)
{
    const auto recs = bound_T1(fixture_stats());
    ASSERT_EQ(recs.size(), 2u);
    EXPECT_EQ(recs[0].quantity, "t_6");
    EXPECT_EQ(recs[0].value, 56);
    EXPECT_EQ(recs[0].actual, Rational(31));
    EXPECT_EQ(recs[0].satisfied, true);
    EXPECT_EQ(recs[1].quantity, "reg(S/I)");
    EXPECT_EQ(recs[1].value, 50);
    EXPECT_EQ(recs[1].actual, Rational(25));
}

TEST(T1, NotApplicableCases)
{
    const auto small = bound_T1(cyclic_stats({0, 2}));
    EXPECT_FALSE(small[0].applicable);
    EXPECT_FALSE(small[1].applicable);
    ModuleStats scaled = cyclic_stats({0, 2, 4});
    scaled.mu = 2;
    EXPECT_FALSE(bound_T1(scaled)[0].applicable);
    EXPECT_NE(bound_T1(scaled)[0].reason.find("cyclic"), std::string::npos);
}

TEST(T2, ThreeGeneratedExample)
{
    const std::vector<int> t{11, 12, 13};
    EXPECT_EQ(half_resolution_bound(t), 894);
}

TEST(T2, RecordOnFixture)
{
    // n = 8, h = 4: 6 + 18 + 28 + 29 + 6*18*28*29/3! = 14697.
    const BoundRecord r = bound_T2(fixture_stats(), 8);
    ASSERT_TRUE(r.applicable);
    EXPECT_EQ(r.value, 81 + oracle::frac(6 * 18 * 28 * 29, 6));
    EXPECT_EQ(r.satisfied, true);
}

TEST(T2, NeedsEnoughColumns)
{
    EXPECT_FALSE(bound_T2(cyclic_stats({0, 2, 3}), 6).applicable);
    EXPECT_THROW(bound_T2(cyclic_stats({0, 2, 3}), 0), std::invalid_argument);
}

TEST(BetaHypothesis, FinalExampleValues)
{
    const std::vector<int> t{12, 13};
    EXPECT_EQ(beta_hypothesis(11, t, 16, 3), oracle::frac(1, 21));
    EXPECT_EQ(beta_hypothesis(11, t, 16, 4), oracle::frac(2, 7));
    EXPECT_THROW(beta_hypothesis(11, t, 16, 2), std::invalid_argument);
}

TEST(BetaHypothesis, ClosedFormsForRAboveFifteen)
{
    const std::vector<int> t{12, 13};
    for (int r = 16; r < 200; ++r) {
        EXPECT_EQ(beta_hypothesis(11, t, r, 3), oracle::frac(2, (r - 9) * (r - 10)));
        EXPECT_EQ(beta_hypothesis(11, t, r, 4), oracle::frac(2, r - 9)) << r;
        EXPECT_LT(beta_hypothesis(11, t, r, 4) * 3, 1);
    }
}

TEST(P1, NumericScanThreeGenerated)
{
    const P1Certificate c = p1_certify(three_generated_ideal(), 2, P1Strategy::NumericScan);
    EXPECT_EQ(c.bound, 15);
    EXPECT_EQ(c.bound - 1, 14);  // reg(S/I) = reg(I) - 1
    EXPECT_FALSE(c.conclusive);
    ASSERT_TRUE(c.last_failure);
    EXPECT_EQ(c.last_failure->r, 15);
    EXPECT_EQ(c.last_failure->s, 4);
    EXPECT_EQ(c.last_failure->beta, oracle::frac(1, 3));
    ASSERT_TRUE(c.largest_beta);
    EXPECT_EQ(c.largest_beta->r, 16);
    EXPECT_EQ(c.largest_beta->beta, oracle::frac(2, 7));
}

TEST(P1, NumericScanRejectsFailureAtTop)
{
    ScanOptions opt;
    opt.r_max = 15;
    EXPECT_THROW(p1_certify(three_generated_ideal(), 2, P1Strategy::NumericScan, opt), NotApplicable);
    opt.r_max = 5;
    EXPECT_THROW(p1_certify(three_generated_ideal(), 2, P1Strategy::NumericScan, opt), NotApplicable);
}

TEST(P1, ThresholdStrategiesNeedCyclicModules)
{
    EXPECT_THROW(p1_certify(three_generated_ideal(), 2, P1Strategy::L3), NotApplicable);
    EXPECT_THROW(p1_certify(three_generated_ideal(), 3, P1Strategy::L2), NotApplicable);
    EXPECT_THROW(p1_certify(three_generated_ideal(), 4, P1Strategy::NumericScan), NotApplicable);
}

TEST(P1, L2MatchesT1)
{
    const ModuleStats s = fixture_stats();
    const P1Certificate c = p1_certify(s, s.p - 1, P1Strategy::L2);
    const auto t1 = bound_T1(s);
    EXPECT_TRUE(c.conclusive);
    EXPECT_EQ(c.threshold, t1[0].value);
    EXPECT_EQ(Rational(c.bound), t1[1].value);
    EXPECT_THROW(p1_certify(s, 3, P1Strategy::L2), NotApplicable);
}

TEST(P1, L3ThreeGeneratedCyclicShape)
{
    // A cyclic table with t = (0, 11, 12, 13, ., .) has L3 threshold 894 - 3.
    ModuleStats s = cyclic_stats({0, 11, 12, 13, 20, 21});
    const P1Certificate c = p1_certify(s, 3, P1Strategy::L3);
    EXPECT_EQ(c.threshold, 891);
    EXPECT_EQ(c.bound, 891);
    EXPECT_TRUE(c.conclusive);
    EXPECT_THROW(p1_certify(s, 2, P1Strategy::L3), NotApplicable);
}

// Every d with (0,...,0,r) <= d <= (0,t_1,...,t_{p-1},r) and r above max{t_i + t_{p-i}}
// has beta_p(d) < 1.
TEST(P1, ConvexityThresholdInstancesBelowOne)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const int p = oracle::uniform(rng, 2, 7);
        std::vector<int> t{0};
        for (int i = 1; i < p; ++i)
            t.push_back(t.back() + oracle::uniform(rng, 1, 5));
        int m = t.back();
        for (int i = 1; i < p; ++i)
            m = std::max(m, t[static_cast<std::size_t>(i)] + t[static_cast<std::size_t>(p - i)]);
        for (int k = 1; k <= 10; ++k) {
            std::vector<int> d(static_cast<std::size_t>(p) + 1, 0);
            d[static_cast<std::size_t>(p)] = m + k;
            for (int i = p - 1; i >= 1; --i) {
                const int hi = std::min(t[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(i + 1)] - 1);
                d[static_cast<std::size_t>(i)] = oracle::uniform(rng, i, hi);
            }
            EXPECT_LT(hk_beta(d, p), 1) << "trial " << trial << " k " << k;
            std::vector<int> top = t;
            top.push_back(m + k);
            EXPECT_LE(hk_beta(d, p), hk_beta(top, p));
        }
    }
}

TEST(ElemSym, SmallExamples)
{
    const std::vector<Rational> x{1, 2, 3};
    EXPECT_EQ(elem_sym(x, 0), 1);
    EXPECT_EQ(elem_sym(x, 1), 6);
    EXPECT_EQ(elem_sym(x, 2), 11);
    EXPECT_EQ(elem_sym(x, 3), 6);
    EXPECT_EQ(elem_sym(std::vector<Rational>{}, 0), 1);
}

TEST(ElemSym, MatchesBruteForce)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = oracle::uniform(rng, 0, 8);
        std::vector<Rational> x;
        for (int k = 0; k < n; ++k)
            x.push_back(oracle::frac(oracle::uniform(rng, -6, 6), oracle::uniform(rng, 1, 4)));
        for (int i = 0; i <= n; ++i)
            EXPECT_EQ(elem_sym(x, i), oracle::elem_sym_bruteforce(x, i));
    }
    EXPECT_THROW(elem_sym(std::vector<Rational>{1, 2}, 3), std::out_of_range);
}

TEST(ElemSym, ProductBoundOnNonnegativeTuples)
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = oracle::uniform(rng, 1, 8);
        std::vector<Rational> x;
        for (int k = 0; k < n; ++k)
            x.push_back(oracle::frac(oracle::uniform(rng, 0, 20), oracle::uniform(rng, 1, 5)));
        for (int i = 0; i < n; ++i)
            EXPECT_GE(elem_sym(x, i) * elem_sym(x, 1), elem_sym(x, i + 1));
    }
}

TEST(DoublyExponential, Values)
{
    EXPECT_EQ(bound_doubly_exponential(2, 4), 256);
    EXPECT_EQ(bound_doubly_exponential(1, 2), 2);
    EXPECT_EQ(bound_doubly_exponential(4, 2), 8);
    EXPECT_EQ(bound_doubly_exponential(3, 2), 6);
    const BigInt big = bound_doubly_exponential(6, 8);
    BigInt expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 12, 64);
    EXPECT_EQ(big, expected);
    EXPECT_GE(big.get_str().size(), 50u);
    EXPECT_THROW(bound_doubly_exponential(2, 1), NotApplicable);
    EXPECT_THROW(bound_doubly_exponential(0, 4), NotApplicable);
    EXPECT_THROW(bound_doubly_exponential(2, 40), NotApplicable);
}

TEST(Texp, Record)
{
    const BoundRecord r = bound_Texp(fixture_stats(), 8);
    ASSERT_TRUE(r.applicable);
    BigInt expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 12, 64);
    EXPECT_EQ(r.value, Rational(expected));
    EXPECT_EQ(r.actual, Rational(26));
}

TEST(Convexity, FixtureViolations)
{
    const auto v = convexity_scan(fixture_stats(), 8);
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v[0].p_prime, 2);
    EXPECT_EQ(v[0].lhs, 18);
    EXPECT_EQ(v[0].rhs, 12);
    bool found = false;
    for (const auto& x : v)
        if (x.p_prime == 3 && x.i == 1) {
            EXPECT_EQ(x.lhs, 28);
            EXPECT_EQ(x.rhs, 24);
            found = true;
        }
    EXPECT_TRUE(found);
    for (const auto& x : v)
        EXPECT_FALSE(x.at_nvars);
}

TEST(Convexity, NoneOnKoszulShapedDiagramsOrAtTheTop)
{
    for (int s = 1; s <= 7; ++s) {
        std::vector<int> d;
        for (int i = 0; i <= s; ++i)
            d.push_back(i);
        EXPECT_TRUE(convexity_scan(stats(pure_diagram(DegreeSequence(d))), s).empty());
    }
    for (const auto& v : convexity_scan(fixture_stats(), 8))
        EXPECT_LT(v.p_prime, 6);
}

TEST(Convexity, NeedsCyclic)
{
    EXPECT_THROW(convexity_scan(three_generated_ideal(), 5), NotApplicable);
}

TEST(EHU, InsufficientDataWithoutInfo)
{
    const auto recs = bound_EHU(fixture_stats(), std::nullopt, 8);
    ASSERT_EQ(recs.size(), 2u);
    for (const auto& r : recs) {
        EXPECT_FALSE(r.applicable);
        EXPECT_EQ(r.reason, "insufficient data");
    }
}

TEST(EHU, ArtinianQuotient)
{
    // S/(x^2, y^3) in two variables: dim 0, depth 0, codim 2, regular sequence of degrees 2, 3.
    const ModuleStats s = stats(BettiDiagram{{{0, 0}, 1}, {{1, 2}, 1}, {{1, 3}, 1}, {{2, 5}, 1}});
    DimensionInfo info;
    info.dim = 0;
    info.depth = 0;
    info.codim = 2;
    info.regular_sequence_degrees = {2, 3};
    const auto recs = bound_EHU(s, info, 2);
    ASSERT_EQ(recs.size(), 2u);
    EXPECT_EQ(recs[0].name, "EHU1[i=1]");
    EXPECT_EQ(recs[0].value, 6);
    EXPECT_EQ(recs[0].satisfied, true);
    EXPECT_EQ(recs[1].name, "EHU2");
    EXPECT_EQ(recs[1].value, 5);
    EXPECT_EQ(recs[1].actual, Rational(5));
    EXPECT_EQ(recs[1].satisfied, true);

    info.dim = 3;
    EXPECT_FALSE(bound_EHU(s, info, 2)[0].applicable);
}

TEST(EHU, CohenMacaulayCodimTwo)
{
    // t = (0, 3, 5): a regular sequence of one cubic gives t_2 <= t_1 + 3 = 6.
    const ModuleStats s = stats(BettiDiagram{{{0, 0}, 1}, {{1, 3}, 2}, {{2, 5}, 1}});
    DimensionInfo info;
    info.dim = 2;
    info.depth = 2;
    info.codim = 2;
    info.regular_sequence_degrees = {3};
    const auto recs = bound_EHU(s, info, 4);
    EXPECT_FALSE(recs[0].applicable);
    ASSERT_TRUE(recs[1].applicable);
    EXPECT_EQ(recs[1].quantity, "t_2");
    EXPECT_EQ(recs[1].value, 6);
    EXPECT_EQ(recs[1].satisfied, true);
}

TEST(EHU, MaximalIdealInThreeVariables)
{
    const ModuleStats s = stats(pure_diagram({0, 1, 2, 3}));
    DimensionInfo info;
    info.dim = 0;
    const auto recs = bound_EHU(s, info, 3);
    ASSERT_EQ(recs.size(), 3u);
    for (int i = 0; i < 2; ++i) {
        EXPECT_EQ(recs[static_cast<std::size_t>(i)].value, 3);
        EXPECT_EQ(recs[static_cast<std::size_t>(i)].satisfied, true);
    }
    EXPECT_FALSE(recs[2].applicable);
}

TEST(Report, OrderAndNames)
{
    const BoundsReport r = bounds_report(fixture_stats(), 8, std::nullopt);
    std::vector<std::string> names;
    for (const auto& rec : r.records)
        names.push_back(rec.name);
    EXPECT_EQ(names, (std::vector<std::string>{"T1", "T1", "T2", "EHU1", "EHU2", "Texp"}));
}
