#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "scheme_atlas/families.hpp"
#include "scheme_atlas/finite_field.hpp"
#include "scheme_atlas/oracle.hpp"
#include "scheme_atlas/qarith.hpp"

namespace atlas {
namespace {

TEST(FiniteFieldTest, AxiomsHoldExhaustively)
{
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const FiniteField f(q);
        EXPECT_TRUE(f.axiom_failures().empty()) << q;
        EXPECT_EQ(f.order(), q);
    }
    EXPECT_EQ(FiniteField(9).characteristic(), 3);
    EXPECT_EQ(FiniteField(8).degree(), 3);
}

TEST(FiniteFieldTest, UnsupportedOrders)
{
    EXPECT_THROW(FiniteField(6), std::invalid_argument);
    EXPECT_THROW(FiniteField(11), std::invalid_argument);
    EXPECT_TRUE(FiniteField::is_prime_power(11));
    EXPECT_FALSE(FiniteField::is_prime_power(6));
    EXPECT_FALSE(FiniteField::is_supported(6));
    EXPECT_THROW((void)FiniteField(5).inv(0), std::domain_error);
}

TEST(SubspaceTest, EchelonFormIsCanonical)
{
    const FiniteField f(3);
    const Subspace a(f, {{1, 2, 0}, {0, 1, 1}}, 3);
    const Subspace b(f, {{1, 0, 1}, {1, 1, 2}}, 3);
    EXPECT_EQ(a.dim(), 2u);
    EXPECT_EQ(a, b);
    const Subspace line(f, {{0, 0, 1}}, 3);
    EXPECT_EQ(intersection_dim(f, a, line), 0u);
    EXPECT_EQ(span_sum(f, a, line).dim(), 3u);
    EXPECT_EQ(enumerate_subspaces(f, 3, 1).size(), 13u);
}

TEST(NbjPoints, Examples)
{
    EXPECT_EQ(enumerate_nbj_points(3, 3, 2).size(), 12u);
    const auto one = enumerate_nbj_points(2, 3, 3);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one.front().entries, (std::vector<int>{1, 1, 1}));
    const auto zero = enumerate_nbj_points(4, 3, 0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero.front().weight(), 0);
    for (int r = 2; r <= 4; ++r) {
        for (int n = 1; n <= 5; ++n) {
            for (int k = 0; k <= n; ++k) {
                EXPECT_EQ(Integer(static_cast<unsigned long>(enumerate_nbj_points(r, n, k).size())),
                          binomial(n, k) * int_pow(r - 1, k));
            }
        }
    }
}

TEST(NbjRelation, Examples)
{
    const WeightedVector x{{1, 1, 0}};
    EXPECT_EQ(nbj_relation(x, x, 2), (MultiIndex{0, 0}));
    EXPECT_EQ(nbj_relation(x, WeightedVector{{1, 2, 0}}, 2), (MultiIndex{1, 0}));
    // one shared support position with equal value, one position moved
    EXPECT_EQ(nbj_relation(x, WeightedVector{{0, 1, 2}}, 2), (MultiIndex{0, 1}));
    EXPECT_EQ(nbj_relation(x, WeightedVector{{0, 2, 2}}, 2), (MultiIndex{1, 1}));
    EXPECT_THROW((void)nbj_relation(x, WeightedVector{{1, 0, 0}}, 2), std::invalid_argument);
}

TEST(AttenuatedPoints, Examples)
{
    EXPECT_EQ(enumerate_attenuated_points(2, 1, 1, 2).size(), 6u);
    EXPECT_EQ(enumerate_attenuated_points(1, 1, 1, 2).size(), 2u);
    EXPECT_EQ(enumerate_attenuated_points(2, 0, 1, 2).size(), 1u);
    EXPECT_THROW((void)enumerate_attenuated_points(2, 1, 1, 6), std::invalid_argument);
    for (int q : {2, 3, 4}) {
        for (int n = 1; n <= 3; ++n) {
            for (int m = 1; m <= n; ++m) {
                for (int l = 1; l <= 2; ++l) {
                    const FamilyParams p = FamilyParams::attenuated(n, m, l, q);
                    if (point_count(p) > 2000) {
                        continue;
                    }
                    EXPECT_EQ(Integer(static_cast<unsigned long>(enumerate_attenuated_points(n, m, l, q).size())),
                              point_count(FamilyParams::attenuated(n, m, l, q)));
                }
            }
        }
    }
}

// Labels are (bilinear part, Grassmann part).
TEST(AttenuatedRelation, Examples)
{
    const FiniteField f(2);
    const Subspace w = attenuated_complement(f, 2, 1);
    const Subspace v(f, {{1, 0, 0}}, 3);
    const Subspace same_projection(f, {{1, 0, 1}}, 3);
    const Subspace other_projection(f, {{0, 1, 0}}, 3);
    EXPECT_EQ(attenuated_relation(f, v, v, w, 1), (MultiIndex{0, 0}));
    EXPECT_EQ(attenuated_relation(f, v, same_projection, w, 1), (MultiIndex{1, 0}));
    EXPECT_EQ(attenuated_relation(f, v, other_projection, w, 1), (MultiIndex{0, 1}));
    const Subspace inside_w(f, {{0, 0, 1}}, 3);
    EXPECT_THROW((void)attenuated_relation(f, v, inside_w, w, 1), std::invalid_argument);
}

TEST(ConcreteSchemeTest, NonbinaryJohnsonAndAttenuated)
{
    const ConcreteScheme j = build_nonbinary_johnson_scheme(3, 3, 2);
    EXPECT_EQ(j.num_points(), 12u);
    EXPECT_EQ(j.classes().size(), 5u);
    EXPECT_EQ(j.classes(), nonbinary_johnson_domain(3, 3, 2));

    const ConcreteScheme a = build_attenuated_scheme(2, 1, 1, 2);
    EXPECT_EQ(a.num_points(), 6u);
    EXPECT_EQ(a.classes().size(), 3u);
    EXPECT_EQ(a.classes(), attenuated_domain(2, 1, 1));
}

TEST(ConcreteSchemeTest, CorruptedRelationMapIsRejected)
{
    const auto points = enumerate_nbj_points(3, 3, 2);
    try {
        (void)build_concrete_scheme(points.size(), [&](std::size_t x, std::size_t y) {
            if ((x == 0 && y == 1) || (x == 1 && y == 0)) {
                return MultiIndex{1, 1};
            }
            return nbj_relation(points[x], points[y], 2);
        });
        FAIL() << "corrupted map accepted";
    } catch (const OracleError& e) {
        EXPECT_EQ(e.axiom(), "A4");
        EXPECT_FALSE(e.witness().empty());
    }
}

TEST(ConcreteSchemeTest, NonSymmetricMapIsRejected)
{
    // Directed 3-cycle: a scheme, but not a symmetric one.
    try {
        (void)build_concrete_scheme(3, [](std::size_t x, std::size_t y) {
            return MultiIndex{static_cast<int>((y + 3 - x) % 3)};
        });
        FAIL() << "non-symmetric map accepted";
    } catch (const OracleError& e) {
        EXPECT_TRUE(e.axiom() == "A3" || e.axiom() == "A6") << e.axiom();
    }
}

TEST(ConcreteSchemeTest, TripleCountsAndValencies)
{
    const ConcreteScheme s = build_nonbinary_johnson_scheme(3, 4, 2);
    const SpectralTable t = nonbinary_johnson_table(3, 4, 2);
    EXPECT_EQ(s.intersection_numbers(), intersection_tensor(t));
    const auto k = s.valencies();
    for (std::size_t a = 0; a < k.size(); ++a) {
        EXPECT_EQ(Rational(k[a]), t.valencies()(static_cast<Eigen::Index>(a)));
    }
}

TEST(ConcreteSchemeTest, DumpFormat)
{
    const ConcreteScheme s = build_attenuated_scheme(1, 1, 1, 2);
    const std::string text = s.dump("attenuated", "q=2,n=1,m=1,l=1");
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "attenuated q=2,n=1,m=1,l=1 2 2");
    std::string row;
    std::getline(in, row);
    EXPECT_EQ(row, "0,0 1,0");
    std::getline(in, row);
    EXPECT_EQ(row, "1,0 0,0");
}

TEST(Idempotents, IdentitiesHold)
{
    const ConcreteScheme s = build_nonbinary_johnson_scheme(3, 3, 2);
    const SpectralTable t = nonbinary_johnson_table(3, 3, 2);
    const IdempotentSet e = build_idempotents(s, t);
    EXPECT_TRUE(e.verified());
    ASSERT_EQ(e.matrices.size(), 5u);
    const RationalMatrix j = RationalMatrix::Constant(12, 12, Rational(Integer(1), Integer(12)));
    EXPECT_EQ(e.matrices.front(), j);
    for (std::size_t b = 0; b < e.matrices.size(); ++b) {
        EXPECT_EQ(e.matrices[b].trace(), t.multiplicities()(static_cast<Eigen::Index>(b)));
    }
    EXPECT_THROW((void)build_idempotents(s, johnson_table(4, 2)), std::invalid_argument);
}

TEST(Idempotents, WrongTableIsReported)
{
    const ConcreteScheme s = build_nonbinary_johnson_scheme(3, 3, 2);
    const SpectralTable good = nonbinary_johnson_table(3, 3, 2);
    // Swap two relation labels: the table stays consistent but no longer
    // matches the scheme.
    RationalMatrix p = good.P();
    RationalMatrix q = good.Q();
    p.row(1).swap(p.row(2));
    q.col(1).swap(q.col(2));
    RationalVector k = good.valencies();
    std::swap(k(1), k(2));
    ASSERT_NE(k(1), k(2));
    const SpectralTable bad("swapped", good.size(), good.relations(), good.idempotents(), p, q, k,
                            good.multiplicities());
    EXPECT_FALSE(build_idempotents(s, bad).verified());
}

TEST(KreinByHadamard, MatchesSpectralSums)
{
    for (const auto& [s, t] : {std::pair{build_nonbinary_johnson_scheme(3, 3, 2), nonbinary_johnson_table(3, 3, 2)},
                               std::pair{build_attenuated_scheme(2, 1, 1, 2), attenuated_table(2, 1, 1, 2)}}) {
        const IdempotentSet e = build_idempotents(s, t);
        ASSERT_TRUE(e.verified());
        const KreinTensor krein = krein_by_hadamard(s, t, e);
        EXPECT_EQ(krein, krein_tensor(t)) << t.label();
        for (std::size_t b = 0; b < t.idempotents().size(); ++b) {
            for (std::size_t c = 0; c < t.idempotents().size(); ++c) {
                EXPECT_EQ(krein(0, b, c), Rational(b == c ? 1 : 0));
            }
        }
    }
}

TEST(SizeGuard, EnvironmentLimit)
{
    ::setenv("SCHEME_ATLAS_MAX_POINTS", "10", 1);
    EXPECT_EQ(oracle_point_limit(), 10u);
    EXPECT_THROW((void)build_nonbinary_johnson_scheme(3, 3, 2), SizeGuardError);
    ::setenv("SCHEME_ATLAS_MAX_POINTS", "junk", 1);
    EXPECT_EQ(oracle_point_limit(), 2000u);
    ::unsetenv("SCHEME_ATLAS_MAX_POINTS");
    EXPECT_EQ(oracle_point_limit(), 2000u);
    EXPECT_NO_THROW(enforce_point_limit(2000));
    EXPECT_THROW(enforce_point_limit(2001), SizeGuardError);
}

} // namespace
} // namespace atlas
