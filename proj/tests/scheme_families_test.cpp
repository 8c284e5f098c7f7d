#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "scheme_atlas/closed_forms.hpp"
#include "scheme_atlas/families.hpp"
#include "scheme_atlas/qarith.hpp"

namespace atlas {
namespace {

RationalVector vec(std::initializer_list<long> values)
{
    RationalVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (long x : values) {
        v(i++) = Rational(x);
    }
    return v;
}

Rational qn(long k, long q) { return Rational(q_number(k, q)); }

TEST(HammingTable, Examples)
{
    const SpectralTable h1 = hamming_table(1, 2);
    RationalMatrix p(2, 2);
    p << 1, 1, 1, -1;
    EXPECT_EQ(h1.P(), p);
    EXPECT_EQ(hamming_table(3, 2).valencies(), vec({1, 3, 3, 1}));
    EXPECT_EQ(hamming_table(4, 5).valencies()(0), Rational(1));
    EXPECT_THROW((void)hamming_table(2, 1), std::invalid_argument);
}

TEST(JohnsonTable, Examples)
{
    const SpectralTable j = johnson_table(4, 2);
    EXPECT_EQ(j.valencies(), vec({1, 4, 1}));
    EXPECT_EQ(j.multiplicities(), vec({1, 3, 2}));
    EXPECT_EQ(johnson_table(7, 3).multiplicities()(0), Rational(1));
    EXPECT_THROW((void)johnson_table(4, 5), std::invalid_argument);
}

TEST(BilinearTable, Examples)
{
    const SpectralTable b11 = bilinear_table(1, 1, 2);
    EXPECT_EQ(b11.size(), 2);
    EXPECT_EQ(b11.valencies(), vec({1, 1}));
    EXPECT_EQ(bilinear_table(2, 1, 2).valencies(), vec({1, 3}));
    EXPECT_EQ(bilinear_table(2, 3, 3).valencies()(0), Rational(1));
}

TEST(GrassmannTable, Examples)
{
    const SpectralTable g = grassmann_table(4, 2, 2);
    EXPECT_EQ(g.size(), 35);
    EXPECT_EQ(g.valencies(), vec({1, 18, 16}));
    EXPECT_EQ(g.multiplicities()(0), Rational(1));
}

TEST(NonbinaryJohnsonTable, Examples)
{
    const SpectralTable t = nonbinary_johnson_table(3, 3, 2);
    EXPECT_EQ(t.size(), 12);
    EXPECT_EQ(t.relations(), Domain({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}}));
    EXPECT_EQ(t.idempotents(), t.relations());
    EXPECT_EQ(t.valencies()(0), Rational(1));
    EXPECT_EQ(t.multiplicities()(0), Rational(1));
    EXPECT_EQ(t.reduction(), Reduction::none);
    EXPECT_EQ(nonbinary_johnson_table(2, 5, 2).reduction(), Reduction::johnson);
    EXPECT_EQ(nonbinary_johnson_table(4, 3, 3).reduction(), Reduction::hamming);
    EXPECT_THROW((void)nonbinary_johnson_table(1, 3, 2), std::invalid_argument);
    EXPECT_THROW((void)nonbinary_johnson_table(3, 3, 4), std::invalid_argument);
}

TEST(AttenuatedTable, Examples)
{
    const SpectralTable t = attenuated_table(2, 1, 1, 2);
    EXPECT_EQ(t.size(), 6);
    EXPECT_EQ(t.relations(), Domain({{0, 0}, {0, 1}, {1, 0}}));
    EXPECT_EQ(t.valencies()(0), Rational(1));
    EXPECT_EQ(t.multiplicities()(0), Rational(1));
    EXPECT_EQ(attenuated_table(2, 2, 1, 2).reduction(), Reduction::bilinear);
    EXPECT_THROW((void)attenuated_table(2, 3, 1, 2), std::invalid_argument);
    EXPECT_THROW((void)attenuated_table(2, 1, 0, 2), std::invalid_argument);
}

TEST(PointCount, MatchesTables)
{
    const std::vector<FamilyParams> params{
        FamilyParams::hamming(3, 4),          FamilyParams::johnson(7, 3),
        FamilyParams::bilinear(2, 3, 2),      FamilyParams::grassmann(5, 2, 3),
        FamilyParams::nonbinary_johnson(4, 5, 3), FamilyParams::attenuated(3, 2, 2, 2),
    };
    for (const auto& p : params) {
        EXPECT_EQ(point_count(p), make_table(p).size()) << p.str();
    }
}

TEST(FamilyParamsTest, ParseAndPrint)
{
    EXPECT_EQ(parse_family("nbj"), Family::nonbinary_johnson);
    EXPECT_EQ(parse_family("attenuated"), Family::attenuated);
    EXPECT_FALSE(parse_family("cube").has_value());
    EXPECT_EQ(FamilyParams::nonbinary_johnson(3, 4, 2).str(), "nonbinary_johnson(r=3,n=4,k=2)");
}

TEST(HammingClosedKrein, Examples)
{
    EXPECT_EQ(hamming_closed_krein(5, 1, 4, 1, 2), Rational(2));
    EXPECT_EQ(hamming_closed_krein(5, 1, 4, 2, 2), Rational(2));
    EXPECT_EQ(hamming_closed_krein(5, 1, 4, 1, 3), Rational(0));
    // against the generic sum for H(k-y, r-1)
    const SpectralTable h = hamming_table(4, 3);
    for (int i = 0; i <= 4; ++i) {
        for (int s = 0; s <= 4; ++s) {
            EXPECT_EQ(hamming_closed_krein(5, 1, 4, i, s), krein_from_spectral(h, {1}, {i}, {s}));
        }
    }
}

TEST(JohnsonClosedKrein, Examples)
{
    EXPECT_EQ(johnson_closed_krein(5, 2, 0, 0, 2), Rational(0));
    EXPECT_EQ(johnson_closed_krein(4, 2, 0, 0, 1), Rational(1));
    EXPECT_EQ(johnson_closed_krein(5, 2, 0, 1, 2), krein_from_spectral(johnson_table(5, 2), {1}, {1}, {2}));
    EXPECT_EQ(johnson_closed_krein(5, 2, 0, 1, 1), johnson_diagonal_krein(5, 2, 0, 1));
}

TEST(BilinearClosedKrein, Examples)
{
    const int q = 2;
    EXPECT_EQ(bilinear_closed_krein(4, 1, 3, q, 1, 2), rational_pow(q, 1) * qn(2, q));
    EXPECT_EQ(bilinear_closed_krein(4, 1, 3, q, 1, 1), qn(1, q) * Rational(8 + 8 - 2 - 1 - 1));
    EXPECT_EQ(bilinear_closed_krein(4, 1, 3, q, 3, 1), Rational(0));
    const SpectralTable b = bilinear_table(3, 3, q);
    for (int i = 0; i <= 3; ++i) {
        for (int s = 0; s <= 3; ++s) {
            EXPECT_EQ(bilinear_closed_krein(4, 1, 3, q, i, s), krein_from_spectral(b, {1}, {i}, {s}));
        }
    }
}

TEST(GrassmannClosedKrein, Examples)
{
    EXPECT_EQ(grassmann_closed_krein(5, 2, 2, 0, 0, 2), Rational(0));
    EXPECT_EQ(grassmann_closed_krein(4, 2, 2, 0, 0, 1), Rational(1));
    EXPECT_EQ(grassmann_closed_krein(5, 2, 2, 0, 1, 0), krein_from_spectral(grassmann_table(5, 2, 2), {1}, {1}, {0}));
    for (int q = 2; q <= 3; ++q) {
        for (int n = 3; n <= 7; ++n) {
            for (int m = 1; m < n; ++m) {
                for (int i = 0; i < m; ++i) {
                    for (int j = 0; j <= std::min(m - i, n - m); ++j) {
                        const Rational total = grassmann_diagonal_part(n, m, q, i, j)
                                             + grassmann_lowering_part(n, m, q, i, j)
                                             + grassmann_raising_part(n, m, q, i, j);
                        EXPECT_EQ(total, qn(n - m, q) * qn(m - i, q) / qn(n - i, q));
                    }
                }
            }
        }
    }
}

TEST(NonbinaryJohnsonClosedKrein, Examples)
{
    EXPECT_EQ(nonbinary_johnson_closed_krein(3, 5, 2, {1, 0}, {0, 0}, {1, 0}), Rational(1));
    EXPECT_EQ(nonbinary_johnson_closed_krein(4, 4, 2, {1, 0}, {1, 1}, {1, 1}), Rational(2));
    EXPECT_EQ(krein_from_spectral(nonbinary_johnson_table(4, 4, 2), {1, 0}, {1, 1}, {1, 1}), Rational(2));
    EXPECT_EQ(nonbinary_johnson_closed_krein(4, 6, 3, {0, 1}, {0, 0}, {2, 0}), Rational(0));
    EXPECT_THROW((void)nonbinary_johnson_closed_krein(3, 5, 2, {1, 1}, {0, 0}, {1, 0}), std::invalid_argument);
    EXPECT_THROW((void)nonbinary_johnson_closed_krein(3, 5, 2, {1, 0}, {3, 0}, {1, 0}), std::out_of_range);
}

TEST(NonbinaryJohnsonClosedKrein, FactorVariantOfLoweringValueDisagreesWithSum)
{
    // With (n-i-j+1) in place of (k-i-j+1) the lowering value is wrong.
    const int r = 3, n = 3, k = 1, i = 1, j = 0;
    const Rational variant = Rational(n * (r - 2) * (n - i - j + 2) * (n - i - j + 1))
                           / Rational(k * (n - i - 2 * j + 2));
    const Rational spectral = krein_from_spectral(nonbinary_johnson_table(r, n, k), {1, 0}, {i, j}, {i - 1, j});
    EXPECT_NE(variant, spectral);
    EXPECT_EQ(nonbinary_johnson_closed_krein(r, n, k, {1, 0}, {i, j}, {i - 1, j}), spectral);
}

TEST(AttenuatedClosedKrein, Examples)
{
    EXPECT_EQ(attenuated_closed_krein(3, 2, 2, 2, {1, 0}, {0, 0}, {1, 0}), Rational(1));
    EXPECT_EQ(attenuated_closed_krein(2, 1, 1, 2, {0, 1}, {0, 0}, {0, 1}), Rational(1));
    EXPECT_EQ(attenuated_closed_krein(4, 2, 2, 2, {1, 0}, {0, 0}, {1, 1}), Rational(0));
}

TEST(KreinSupport, Lists)
{
    EXPECT_EQ(nonbinary_johnson_krein_support({1, 0}, {1, 1}).size(), 5u);
    EXPECT_EQ(nonbinary_johnson_krein_support({0, 1}, {1, 1}).size(), 3u);
    const auto att = attenuated_krein_support({1, 0}, {1, 1});
    EXPECT_EQ(std::count(att.begin(), att.end(), MultiIndex{2, 2}), 0);
}

TEST(VerifyClosedForms, Examples)
{
    const ClosedFormReport nbj = verify_closed_forms(FamilyParams::nonbinary_johnson(3, 5, 2));
    EXPECT_TRUE(nbj.passed());
    EXPECT_GT(nbj.entries_checked, 0u);
    EXPECT_TRUE(nbj.q_polynomial.verdict());
    const ClosedFormReport att = verify_closed_forms(FamilyParams::attenuated(3, 2, 1, 2));
    EXPECT_TRUE(att.passed());
    EXPECT_TRUE(att.q_polynomial.verdict());
}

TEST(VerifyClosedForms, PerturbationIsListed)
{
    const FamilyParams params = FamilyParams::nonbinary_johnson(3, 5, 2);
    const SpectralTable t = make_table(params);
    KreinTensor krein = krein_tensor(t);
    const Domain& d = t.idempotents();
    krein(d.require_position({1, 0}), d.require_position({1, 1}), d.require_position({1, 1})) += Rational(1);
    const ClosedFormReport report = verify_closed_forms(params, t, krein);
    EXPECT_FALSE(report.passed());
    ASSERT_EQ(report.value_mismatches.size(), 1u);
    EXPECT_EQ(report.value_mismatches.front().from, (MultiIndex{1, 1}));
}

TEST(Reductions, CollapseToClassicalTables)
{
    EXPECT_EQ(reduced_family(FamilyParams::nonbinary_johnson(2, 5, 2)), FamilyParams::johnson(5, 2));
    EXPECT_EQ(reduced_family(FamilyParams::nonbinary_johnson(4, 3, 3)), FamilyParams::hamming(3, 3));
    EXPECT_EQ(reduced_family(FamilyParams::attenuated(2, 2, 3, 2)), FamilyParams::bilinear(2, 3, 2));
    EXPECT_FALSE(reduced_family(FamilyParams::nonbinary_johnson(3, 5, 2)).has_value());
    for (const auto& p : {FamilyParams::nonbinary_johnson(2, 5, 2), FamilyParams::nonbinary_johnson(2, 6, 3),
                          FamilyParams::nonbinary_johnson(3, 3, 3), FamilyParams::nonbinary_johnson(5, 2, 2),
                          FamilyParams::attenuated(2, 2, 1, 2), FamilyParams::attenuated(3, 3, 2, 2),
                          FamilyParams::attenuated(2, 2, 3, 3)}) {
        EXPECT_TRUE(reduction_mismatches(p).empty()) << p.str();
    }
    EXPECT_THROW((void)reduction_mismatches(FamilyParams::nonbinary_johnson(3, 5, 2)), std::invalid_argument);
}

// Properties.

std::vector<FamilyParams> small_grid()
{
    std::vector<FamilyParams> grid;
    for (int q = 2; q <= 3; ++q) {
        for (int n = 1; n <= 5; ++n) {
            grid.push_back(FamilyParams::hamming(n, q));
            for (int l = 1; l <= 3; ++l) {
                grid.push_back(FamilyParams::bilinear(n, l, q));
            }
            for (int m = 1; m < n; ++m) {
                grid.push_back(FamilyParams::grassmann(n, m, q));
            }
            for (int m = 1; m <= n; ++m) {
                for (int l = 1; l <= 2; ++l) {
                    grid.push_back(FamilyParams::attenuated(n, m, l, q));
                }
            }
        }
    }
    for (int n = 2; n <= 8; ++n) {
        for (int k = 1; k < n; ++k) {
            grid.push_back(FamilyParams::johnson(n, k));
        }
    }
    for (int r = 2; r <= 4; ++r) {
        for (int n = 2; n <= 6; ++n) {
            for (int k = 1; k <= n; ++k) {
                grid.push_back(FamilyParams::nonbinary_johnson(r, n, k));
            }
        }
    }
    return grid;
}

TEST(FamiliesProperty, TableInvariantsAndSumRules)
{
    for (const FamilyParams& p : small_grid()) {
        const SpectralTable t = make_table(p);
        EXPECT_TRUE(table_invariant_failures(t).empty()) << p.str();
        EXPECT_TRUE(krein_rule_failures(t, krein_tensor(t)).empty()) << p.str();
        EXPECT_TRUE(intersection_rule_failures(t, intersection_tensor(t)).empty()) << p.str();
    }
}

TEST(FamiliesProperty, SumRuleCheckCatchesPerturbation)
{
    const SpectralTable t = johnson_table(6, 3);
    KreinTensor krein = krein_tensor(t);
    krein(1, 1, 1) = krein(1, 1, 1) - Rational(1000);
    EXPECT_FALSE(krein_rule_failures(t, krein).empty());
}

} // namespace
} // namespace atlas
