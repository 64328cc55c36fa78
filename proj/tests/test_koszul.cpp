#include "bettikit/errors.hpp"
#include "bettikit/koszul.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace bettikit;

namespace {

KoszulOptions over(std::uint32_t characteristic)
{
    KoszulOptions o;
    o.field = FieldChoice(characteristic);
    return o;
}

std::uint64_t binom(int n, int k)
{
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace

TEST(Koszul, HandTables)
{
    const BettiDiagram xy{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}};
    EXPECT_EQ(betti_table(MonomialIdeal(2, {{1, 0}, {0, 1}})), xy);

    const BettiDiagram xyz{{{0, 0}, 1}, {{1, 1}, 3}, {{2, 2}, 3}, {{3, 3}, 1}};
    EXPECT_EQ(betti_table(MonomialIdeal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), xyz);

    const BettiDiagram x2_xy{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}};
    EXPECT_EQ(betti_table(MonomialIdeal(2, {{2, 0}, {1, 1}})), x2_xy);

    const BettiDiagram x2_y3{{{0, 0}, 1}, {{1, 2}, 1}, {{1, 3}, 1}, {{2, 5}, 1}};
    EXPECT_EQ(betti_table(MonomialIdeal(2, {{2, 0}, {0, 3}})), x2_y3);

    EXPECT_EQ(betti_table(MonomialIdeal(3, {})), (BettiDiagram{{{0, 0}, 1}}));
}

TEST(Koszul, FlagsAndNvars)
{
    const BettiDiagram b = betti_table(MonomialIdeal(2, {{2, 0}, {0, 3}}));
    EXPECT_TRUE(b.minimal());
    EXPECT_EQ(b.nvars(), 2);
}

TEST(Koszul, KernelsAgreeWithHochster)
{
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t k = 0; k < 25; ++k) {
            const MonomialIdeal ideal = random_ideal(n, 3, 2 + static_cast<int>(k % 4), mix_seed(500 + 31 * n + k));
            const BettiDiagram fast = betti_table(ideal);
            EXPECT_EQ(fast, betti_table_reference(ideal)) << format_ideal(ideal);
            EXPECT_EQ(fast, oracle::hochster_betti(ideal)) << format_ideal(ideal);
        }
}

TEST(Koszul, CharacteristicZeroAgreesForFewVariables)
{
    for (std::uint64_t k = 0; k < 30; ++k) {
        const MonomialIdeal ideal = random_ideal(3, 3, 5, mix_seed(900 + k));
        const BettiDiagram modp = betti_table(ideal);
        EXPECT_EQ(betti_table(ideal, over(0)), modp);
        EXPECT_EQ(betti_table(ideal, over(2)), modp);
        EXPECT_EQ(betti_table_reference(ideal, over(0)), modp);
    }
}

TEST(Koszul, StanleyReisnerOfProjectivePlaneDependsOnCharacteristic)
{
    // Six-vertex triangulation of RP^2; its face ring has an extra syzygy in characteristic 2.
    const std::vector<std::vector<int>> facets{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                               {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
    // Non-faces: triples not in any facet give the minimal generators (all edges are present).
    std::vector<Exponents> gens;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            for (int c = b + 1; c <= 6; ++c) {
                bool face = false;
                for (const auto& f : facets)
                    face = face || (std::find(f.begin(), f.end(), a) != f.end() &&
                                    std::find(f.begin(), f.end(), b) != f.end() &&
                                    std::find(f.begin(), f.end(), c) != f.end());
                if (!face) {
                    Exponents e(6, 0);
                    e[static_cast<std::size_t>(a - 1)] = e[static_cast<std::size_t>(b - 1)] =
                        e[static_cast<std::size_t>(c - 1)] = 1;
                    gens.push_back(e);
                }
            }
    const MonomialIdeal ideal(6, gens);
    ASSERT_EQ(ideal.generators().size(), 10u);
    const BettiDiagram q = betti_table(ideal, over(0));
    const BettiDiagram f2 = betti_table(ideal, over(2));
    EXPECT_NE(q, f2);
    EXPECT_EQ(f2, oracle::hochster_betti(ideal, 2));
    EXPECT_EQ(betti_table(ideal, over(32003)), q);
}

TEST(Koszul, StrandShape)
{
    const MonomialIdeal ideal(3, {{2, 0, 0}, {0, 2, 0}, {1, 1, 1}});
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 7; ++j) {
            std::size_t standard_src = 0;
            for (const auto& m : monomials_of_degree(3, j - i))
                standard_src += !ideal.contains(m);
            std::size_t standard_dst = 0;
            for (const auto& m : monomials_of_degree(3, j - i + 1))
                standard_dst += !ideal.contains(m);
            const KoszulDims d = strand_shape(ideal, i, j);
            EXPECT_EQ(d.cols, binom(3, i) * standard_src);
            EXPECT_EQ(d.rows, binom(3, i - 1) * standard_dst);
        }
}

TEST(Koszul, BudgetIsEnforced)
{
    const MonomialIdeal ideal(4, {{5, 0, 0, 0}, {0, 5, 0, 0}, {0, 0, 5, 0}, {0, 0, 0, 5}});
    KoszulOptions tiny;
    tiny.cell_budget = 50;
    EXPECT_THROW(betti_table(ideal, tiny), TooLarge);
    EXPECT_THROW(betti_table_reference(ideal, tiny), TooLarge);
    // Complete intersection: Koszul complex on x_i^5.
    const BettiDiagram b = betti_table(ideal);
    EXPECT_EQ(b.at(1, 5), 4);
    EXPECT_EQ(b.at(2, 10), 6);
    EXPECT_EQ(b.at(3, 15), 4);
    EXPECT_EQ(b.at(4, 20), 1);
    EXPECT_EQ(b.size(), 5u);
}

TEST(Koszul, FieldValidation)
{
    EXPECT_THROW(FieldChoice(4), std::invalid_argument);
    EXPECT_THROW(FieldChoice(1), std::invalid_argument);
    EXPECT_NO_THROW(FieldChoice(2147483647u));
    EXPECT_TRUE(FieldChoice::rationals().is_rational());
    EXPECT_EQ(FieldChoice().characteristic(), 32003u);
}

TEST(Hilbert, PassesOnComputedTables)
{
    for (std::uint64_t k = 0; k < 40; ++k) {
        const MonomialIdeal ideal = random_ideal(3, 4, 4, mix_seed(77 + k));
        const BettiDiagram b = betti_table(ideal);
        int top = 0;
        for (const auto& [key, v] : b.entries())
            top = std::max(top, key.second);
        EXPECT_TRUE(hilbert_check(ideal, b, top + 3).ok) << format_ideal(ideal);
    }
}

TEST(Hilbert, DetectsCorruption)
{
    const MonomialIdeal ideal(2, {{2, 0}, {1, 1}});
    BettiDiagram b = betti_table(ideal);
    b.add(1, 2, 1);
    const HilbertCheck h = hilbert_check(ideal, b, 6);
    EXPECT_FALSE(h.ok);
    EXPECT_EQ(h.first_mismatch, 2);

    // Cancelling changes keep the alternating sum and are not detected.
    BettiDiagram c = betti_table(ideal);
    c.add(1, 3, 1);
    c.add(2, 3, 1);
    EXPECT_TRUE(hilbert_check(ideal, c, 6).ok);
    EXPECT_THROW(hilbert_check(ideal, b, 2), std::invalid_argument);
}

TEST(Koszul, PrincipalIdeals)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const MonomialIdeal ideal = random_ideal(4, 5, 1, seed);
        ASSERT_EQ(ideal.generators().size(), 1u);
        const int d = total_degree(ideal.generators()[0]);
        EXPECT_EQ(betti_table(ideal), (BettiDiagram{{{0, 0}, 1}, {{1, d}, 1}}));
    }
}

TEST(Koszul, OutputProperties)
{
    for (std::uint64_t k = 0; k < 40; ++k) {
        const MonomialIdeal ideal = random_ideal(4, 4, 5, mix_seed(3000 + k));
        const BettiDiagram b = betti_table(ideal);
        const auto caps = taylor_degree_caps(ideal);
        std::optional<int> prev;
        for (int i = 0; i <= b.max_column(); ++i) {
            const auto col = b.column(i);
            ASSERT_FALSE(col.empty());
            if (prev)
                EXPECT_GT(col.front().first, *prev);
            prev = col.front().first;
            if (i >= 1)
                EXPECT_LE(col.back().first, caps[static_cast<std::size_t>(i - 1)]);
        }
        // Two primes that agree should agree with characteristic zero.
        const BettiDiagram other = betti_table(ideal, over(65521));
        if (other == b)
            EXPECT_EQ(betti_table(ideal, over(0)), b);
    }
}
