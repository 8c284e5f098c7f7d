#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "scheme_atlas/families.hpp"
#include "scheme_atlas/multi_index.hpp"
#include "scheme_atlas/polynomiality.hpp"
#include "scheme_atlas/spectral.hpp"

namespace atlas {
namespace {

SpectralTable one_class_table()
{
    RationalMatrix pq(2, 2);
    pq << 1, 1, 1, -1;
    RationalVector ones(2);
    ones << 1, 1;
    return SpectralTable("K2", 2, Domain::interval(1), Domain::interval(1), pq, pq, ones, ones);
}

TEST(MultiIndex, Arithmetic)
{
    const MultiIndex a{1, 2};
    const MultiIndex b{0, 3};
    EXPECT_EQ(a + b, (MultiIndex{1, 5}));
    EXPECT_EQ(a - b, (MultiIndex{1, -1}));
    EXPECT_FALSE((a - b).is_nonnegative());
    EXPECT_EQ(a.degree(), 3);
    EXPECT_EQ(a.str(), "(1,2)");
    EXPECT_TRUE((MultiIndex{0, 2}).dominated_by(MultiIndex{1, 2}));
    EXPECT_THROW((void)(a + MultiIndex{1}), std::invalid_argument);
    EXPECT_EQ(MultiIndex::unit(3, 1), (MultiIndex{0, 1, 0}));
}

TEST(MonomialOrderCompare, Examples)
{
    const auto grlex = MonomialOrder::grlex();
    const auto lex = MonomialOrder::lex();
    EXPECT_EQ(compare(grlex, {1, 1}, {2, 0}), std::weak_ordering::less);
    EXPECT_EQ(compare(grlex, {1, 0}, {0, 2}), std::weak_ordering::less);
    EXPECT_EQ(compare(lex, {0, 5}, {1, 0}), std::weak_ordering::less);
    EXPECT_EQ(compare(grlex, {2, 1}, {2, 1}), std::weak_ordering::equivalent);
    EXPECT_EQ(compare(MonomialOrder::grlex_reversed(2), {1, 1}, {2, 0}), std::weak_ordering::greater);
    EXPECT_THROW((void)compare(grlex, {1}, {1, 0}), std::invalid_argument);
    EXPECT_EQ(all_orders(2).size(), 4u);
}

TEST(DomainTest, OrderingAndLookup)
{
    const Domain d({{1, 0}, {0, 0}, {0, 2}, {0, 1}});
    EXPECT_EQ(d.at(0), (MultiIndex{0, 0}));
    EXPECT_EQ(d.at(1), (MultiIndex{0, 1}));
    EXPECT_EQ(d.at(2), (MultiIndex{1, 0}));
    EXPECT_EQ(d.at(3), (MultiIndex{0, 2}));
    EXPECT_EQ(d.require_position({1, 0}), 2u);
    EXPECT_FALSE(d.contains({1, 1}));
    EXPECT_THROW((void)d.require_position({5, 5}), std::out_of_range);
    EXPECT_THROW(Domain({{0, 0}, {0, 0}}), std::invalid_argument);
    EXPECT_THROW(Domain({{0, -1}}), std::invalid_argument);
    EXPECT_THROW(Domain({{0, 0}, {0}}), std::invalid_argument);
    EXPECT_EQ(Domain::simplex(2, 2).size(), 6u);
}

TEST(DownwardClosed, Examples)
{
    EXPECT_TRUE(is_downward_closed(Domain({{0, 0}, {1, 0}, {0, 1}})));
    EXPECT_FALSE(is_downward_closed(Domain({{0, 0}, {1, 1}})));
    EXPECT_TRUE(is_downward_closed(nonbinary_johnson_domain(3, 5, 2)));
}

TEST(SpectralTableTest, RejectsInconsistentInput)
{
    RationalMatrix p(2, 2);
    p << 1, 1, 1, -1;
    RationalMatrix bad = p;
    bad(1, 1) = 0;
    RationalVector ones(2);
    ones << 1, 1;
    EXPECT_THROW(SpectralTable("x", 2, Domain::interval(1), Domain::interval(1), p, bad, ones, ones),
                 std::invalid_argument);
    RationalVector wrong(2);
    wrong << 1, 2;
    EXPECT_THROW(SpectralTable("x", 2, Domain::interval(1), Domain::interval(1), p, p, wrong, ones),
                 std::invalid_argument);
}

TEST(KreinFromSpectral, Examples)
{
    const SpectralTable k2 = one_class_table();
    EXPECT_EQ(krein_from_spectral(k2, {1}, {1}, {1}), Rational(0));
    EXPECT_EQ(krein_from_spectral(k2, {1}, {1}, {0}), Rational(1));

    const SpectralTable h = hamming_table(3, 2);
    EXPECT_EQ(krein_from_spectral(h, {1}, {1}, {2}), Rational(2));
    for (const auto& i : h.idempotents()) {
        for (const auto& j : h.idempotents()) {
            EXPECT_EQ(krein_from_spectral(h, i, {0}, j), Rational(i == j ? 1 : 0));
        }
    }
    EXPECT_THROW((void)krein_from_spectral(h, {4}, {0}, {0}), std::out_of_range);
}

TEST(IntersectionFromSpectral, Examples)
{
    const SpectralTable k2 = one_class_table();
    EXPECT_EQ(intersection_from_spectral(k2, {1}, {1}, {0}), Rational(1));
    const SpectralTable j = johnson_table(4, 2);
    EXPECT_EQ(intersection_from_spectral(j, {1}, {1}, {0}), Rational(4));
    for (const auto& a : j.relations()) {
        for (const auto& b : j.relations()) {
            EXPECT_EQ(intersection_from_spectral(j, {0}, a, b), Rational(a == b ? 1 : 0));
        }
    }
}

TEST(OrthogonalityResidual, Examples)
{
    EXPECT_TRUE(orthogonality_residual(one_class_table(), {0}, {0}).is_zero());
    EXPECT_TRUE(orthogonality_residual(hamming_table(3, 2), {1}, {2}).is_zero());
    EXPECT_TRUE(orthogonality_residual(johnson_table(4, 2), {1}, {1}).is_zero());
}

TEST(QPolynomial, NonbinaryJohnsonAndAttenuated)
{
    for (const SpectralTable& t : {nonbinary_johnson_table(3, 4, 2), attenuated_table(2, 1, 1, 2)}) {
        const auto report = check_q_polynomial(t, t.idempotents(), MonomialOrder::grlex(), krein_tensor(t));
        EXPECT_TRUE(report.verdict()) << t.label();
        EXPECT_TRUE(report.violations.empty());
    }
}

TEST(QPolynomial, InjectedZeroIsReported)
{
    const SpectralTable t = nonbinary_johnson_table(3, 4, 2);
    KreinTensor krein = krein_tensor(t);
    const Domain& d = t.idempotents();
    const std::size_t g = d.require_position({1, 0});
    const std::size_t from = d.require_position({1, 0});
    const std::size_t to = d.require_position({2, 0});
    ASSERT_FALSE(krein(g, from, to).is_zero());
    krein(g, from, to) = 0;
    const auto report = check_q_polynomial(t, d, MonomialOrder::grlex(), krein);
    EXPECT_FALSE(report.verdict());
    ASSERT_FALSE(report.violations.empty());
    EXPECT_EQ(report.violations.front().kind, PolynomialityViolation::Kind::vanishing_leading);
    EXPECT_EQ(report.violations.front().to, (MultiIndex{2, 0}));
}

TEST(QPolynomial, MismatchedDomainThrows)
{
    const SpectralTable t = nonbinary_johnson_table(3, 4, 2);
    EXPECT_THROW((void)check_q_polynomial(t, Domain::simplex(2, 1), MonomialOrder::grlex(), krein_tensor(t)),
                 std::invalid_argument);
}

TEST(PPolynomial, Examples)
{
    const SpectralTable j = nonbinary_johnson_table(3, 4, 2);
    const IntersectionTensor ij = intersection_tensor(j);
    // The uniform labeling needs the variables read in the other priority.
    EXPECT_FALSE(check_p_polynomial(j, j.relations(), MonomialOrder::grlex(), ij).verdict());
    EXPECT_TRUE(check_p_polynomial(j, j.relations(), MonomialOrder::grlex_reversed(2), ij).verdict());

    const SpectralTable a = attenuated_table(2, 1, 1, 2);
    IntersectionTensor ia = intersection_tensor(a);
    EXPECT_TRUE(check_p_polynomial(a, a.relations(), MonomialOrder::grlex(), ia).verdict());

    const Domain& d = a.relations();
    const std::size_t g = d.require_position({0, 1});
    ia(g, d.require_position({0, 0}), g) = 0;
    EXPECT_FALSE(check_p_polynomial(a, d, MonomialOrder::grlex(), ia).verdict());
}

TEST(PolynomialStructure, NotDownwardClosed)
{
    const Domain d({{0, 0}, {1, 1}});
    const auto report = check_polynomial_structure(d, MonomialOrder::grlex(), Tensor3<Rational>(2));
    EXPECT_FALSE(report.downward_closed);
    EXPECT_FALSE(report.verdict());
}

// Properties.

MultiIndex random_index(std::mt19937& rng, std::size_t dim, int max_degree)
{
    std::vector<int> e(dim, 0);
    std::uniform_int_distribution<std::size_t> axis(0, dim - 1);
    std::uniform_int_distribution<int> degree(0, max_degree);
    for (int d = degree(rng); d > 0; --d) {
        ++e[axis(rng)];
    }
    return MultiIndex(e);
}

TEST(MonomialOrderProperty, Axioms)
{
    std::mt19937 rng(7);
    for (std::size_t dim = 1; dim <= 3; ++dim) {
        for (const MonomialOrder& order : all_orders(dim)) {
            const MultiIndex zero = MultiIndex::zero(dim);
            for (int trial = 0; trial < 300; ++trial) {
                const MultiIndex a = random_index(rng, dim, 12);
                const MultiIndex b = random_index(rng, dim, 12);
                const MultiIndex c = random_index(rng, dim, 12);
                // total and antisymmetric
                const auto ab = compare(order, a, b);
                EXPECT_EQ(ab == 0, a == b);
                EXPECT_EQ(compare(order, b, a), 0 <=> ab);
                // zero is least
                EXPECT_NE(compare(order, zero, a), std::weak_ordering::greater);
                // compatible with addition
                EXPECT_EQ(compare(order, a + c, b + c), ab);
                // transitive
                if (ab < 0 && compare(order, b, c) < 0) {
                    EXPECT_TRUE(compare(order, a, c) < 0);
                }
            }
        }
    }
}

} // namespace
} // namespace atlas
