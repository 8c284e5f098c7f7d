#include <algorithm>
#include <stdexcept>

#include <gtest/gtest.h>

#include "scheme_atlas/families.hpp"
#include "scheme_atlas/orthopoly.hpp"
#include "scheme_atlas/qarith.hpp"

namespace atlas {
namespace {

Rational frac(long a, long b) { return Rational(Integer(a), Integer(b)); }

TEST(Krawtchouk, Examples)
{
    for (int j = 0; j <= 5; ++j) {
        EXPECT_EQ(krawtchouk(0, 5, 3, j), Rational(1));
        EXPECT_EQ(krawtchouk(1, 5, 3, j), Rational(2 * (5 - j) - j));
    }
    EXPECT_EQ(krawtchouk(1, 5, 3, 0), Rational(10));
    EXPECT_EQ(krawtchouk(6, 5, 3, 0), Rational(0));
    EXPECT_EQ(krawtchouk(1, 5, 3, 6), Rational(0));
    EXPECT_THROW((void)krawtchouk(1, 5, 1, 0), std::invalid_argument);
}

TEST(Eberlein, Examples)
{
    EXPECT_EQ(eberlein(0, 6, 2, 1), Rational(1));
    EXPECT_EQ(eberlein(1, 6, 2, 0), Rational(8));
    for (int n = 2; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int i = 0; i <= std::min(k, n - k); ++i) {
                EXPECT_EQ(eberlein(i, n, k, 0), Rational(binomial(k, i) * binomial(n - k, i)));
            }
        }
    }
    EXPECT_EQ(eberlein(3, 6, 2, 0), Rational(0));
    EXPECT_THROW((void)eberlein(0, 3, 4, 0), std::invalid_argument);
}

TEST(Hahn, DegreeOneClosedForm)
{
    for (int n = 2; n <= 9; ++n) {
        for (int k = 1; k < n; ++k) {
            for (int y = 0; y <= std::min(k, n - k); ++y) {
                const Rational expected = frac(n - 1, k * (n - k)) * Rational(k * (n - k) - n * y);
                EXPECT_EQ(hahn(1, n, k, y), expected) << n << ' ' << k << ' ' << y;
                EXPECT_EQ(hahn(0, n, k, y), Rational(1));
            }
        }
    }
}

TEST(Hahn, TopDegreeClosedForm)
{
    for (int N = 2; N <= 10; ++N) {
        for (int p = 1; 2 * p <= N; ++p) {
            for (int x = 0; x <= p; ++x) {
                const Rational expected = Rational(x % 2 == 0 ? 1 : -1) * frac(N - 2 * p + 1, N - p + 1)
                                        * Rational(binomial(N, p)) / Rational(binomial(N - p, x));
                EXPECT_EQ(hahn(p, N, p, x), expected) << N << ' ' << p << ' ' << x;
            }
        }
    }
}

TEST(GenKrawtchouk, Examples)
{
    EXPECT_EQ(gen_krawtchouk(0, 3, 2, 2, 1), Rational(1));
    // H_2(2,1) is the complete graph on 4 vertices.
    EXPECT_EQ(gen_krawtchouk(1, 2, 1, 2, 1), Rational(-1));
    EXPECT_EQ(gen_krawtchouk(1, 2, 1, 2, 0), Rational(3));
}

TEST(GenEberlein, Examples)
{
    EXPECT_EQ(gen_eberlein(0, 4, 2, 2, 1), Rational(1));
    EXPECT_EQ(gen_eberlein(1, 4, 2, 2, 1), Rational(3));
    for (int q = 2; q <= 3; ++q) {
        for (int n = 1; n <= 6; ++n) {
            for (int m = 0; m <= n; ++m) {
                for (int i = 0; i <= std::min(m, n - m); ++i) {
                    const Integer expected = int_pow(q, i * i) * q_binomial(n - m, i, q) * q_binomial(m, i, q);
                    EXPECT_EQ(gen_eberlein(i, n, m, q, 0), Rational(expected));
                }
            }
        }
    }
}

TEST(QHahn, DegreeOneClosedForm)
{
    for (int q = 2; q <= 3; ++q) {
        for (int n = 2; n <= 6; ++n) {
            for (int m = 1; m < n; ++m) {
                for (int j = 0; j <= std::min(m, n - m); ++j) {
                    const Rational inner = Rational(q_number(n - m, q) * q_number(m, q)) / Rational(q_number(n, q))
                                         + q_number_signed(-j, q);
                    EXPECT_EQ(q_hahn(1, n, m, q, j), h_star(n, m, q) * inner);
                    EXPECT_EQ(q_hahn(0, n, m, q, j), Rational(1));
                }
            }
        }
    }
}

TEST(QHahn, TopDegreeClosedForm)
{
    for (int q = 2; q <= 3; ++q) {
        for (int N = 2; N <= 7; ++N) {
            for (int p = 1; 2 * p <= N; ++p) {
                for (int x = 0; x <= p; ++x) {
                    const Rational expected = Rational(x % 2 == 0 ? 1 : -1)
                                            * rational_pow(q, p - (x * x + x) / 2)
                                            * Rational(q_number(N - 2 * p + 1, q))
                                            / Rational(q_number(N - p + 1, q)) * Rational(q_binomial(N, p, q))
                                            / Rational(q_binomial(N - p, x, q));
                    EXPECT_EQ(q_hahn(p, N, p, q, x), expected);
                }
            }
        }
    }
}

TEST(Recurrences, Examples)
{
    EXPECT_TRUE(hahn_recurrence_residual(6, 3, 0, 1).is_zero());
    EXPECT_TRUE(hahn_recurrence_residual(6, 3, 3, 2).is_zero());
    EXPECT_TRUE(hahn_recurrence_residual(8, 3, 2, 1).is_zero());
    EXPECT_TRUE(q_hahn_recurrence_residual(4, 2, 2, 0, 1).is_zero());
    EXPECT_TRUE(q_hahn_recurrence_residual(4, 2, 2, 2, 1).is_zero());
    EXPECT_TRUE(q_hahn_recurrence_residual(6, 2, 3, 1, 1).is_zero());
    EXPECT_THROW((void)hahn_recurrence_residual(6, 6, 0, 0), std::invalid_argument);
}

TEST(Shifts, Examples)
{
    EXPECT_TRUE(hahn_degree_one_shift_residual(5, 2, 0, 1).is_zero());
    EXPECT_TRUE(hahn_degree_one_shift_residual(6, 3, 1, 2).is_zero());
    EXPECT_TRUE(hahn_degree_one_shift_residual(7, 3, 2, 1).is_zero());
    EXPECT_TRUE(q_hahn_degree_one_shift_residual(4, 2, 2, 0, 1).is_zero());
    EXPECT_TRUE(q_hahn_degree_one_shift_residual(4, 2, 2, 1, 1).is_zero());
    EXPECT_TRUE(q_hahn_degree_one_shift_residual(5, 2, 3, 1, 1).is_zero());
}

TEST(Evaluate, DispatchAndBounds)
{
    const PolyEval e = evaluate(PolyFamily::krawtchouk, {5, 3}, 1, 0);
    EXPECT_EQ(e.value, Rational(10));
    EXPECT_EQ(degree_bound(PolyFamily::hahn, {7, 3}), 3);
    EXPECT_EQ(degree_bound(PolyFamily::gen_krawtchouk, {2, 4, 2}), 2);
    EXPECT_THROW((void)evaluate(PolyFamily::q_hahn, {4, 2}, 0, 0), std::invalid_argument);
    EXPECT_EQ(to_string(PolyFamily::q_hahn), "q_hahn");
}

// Properties.

TEST(OrthopolyProperty, ValuesAtZeroAreValencies)
{
    for (int q = 2; q <= 4; ++q) {
        for (int n = 1; n <= 8; ++n) {
            const SpectralTable h = hamming_table(n, q);
            for (int i = 0; i <= n; ++i) {
                EXPECT_EQ(krawtchouk(i, n, q, 0), h.valencies()(i));
            }
            for (int l = 1; l <= 3 && n * l <= 12; ++l) {
                const SpectralTable b = bilinear_table(n, l, q);
                for (int i = 0; i <= std::min(n, l); ++i) {
                    EXPECT_EQ(gen_krawtchouk(i, n, l, q, 0), b.valencies()(i));
                }
            }
        }
    }
}

TEST(OrthopolyProperty, VanishOutsideRange)
{
    EXPECT_EQ(hahn(3, 7, 2, 0), Rational(0));
    EXPECT_EQ(hahn(1, 7, 2, 3), Rational(0));
    EXPECT_EQ(hahn(-1, 7, 2, 0), Rational(0));
    EXPECT_EQ(q_hahn(-1, 4, 2, 2, 0), Rational(0));
    EXPECT_EQ(gen_eberlein(2, 4, 1, 2, 0), Rational(0));
    EXPECT_EQ(gen_krawtchouk(0, 2, 2, 2, 3), Rational(0));
}

TEST(OrthopolyProperty, HahnOrthogonalUnderJohnsonWeights)
{
    for (int n = 2; n <= 8; ++n) {
        for (int k = 1; k < n; ++k) {
            const SpectralTable t = johnson_table(n, k);
            const int d = std::min(k, n - k);
            for (int i = 0; i <= d; ++i) {
                for (int j = 0; j <= d; ++j) {
                    Rational sum = 0;
                    for (int y = 0; y <= d; ++y) {
                        sum += t.valencies()(y) * hahn(i, n, k, y) * hahn(j, n, k, y);
                    }
                    const Rational expected = i == j ? Rational(binomial(n, k)) * t.multiplicities()(i) : Rational(0);
                    EXPECT_EQ(sum, expected) << n << ' ' << k << ' ' << i << ' ' << j;
                }
            }
        }
    }
}

TEST(OrthopolyProperty, RecurrencesVanishOnGrid)
{
    for (int N = 2; N <= 10; ++N) {
        for (int p = 1; p < N; ++p) {
            for (int x = 0; x <= std::min(p - 1, N - p); ++x) {
                for (int r = 0; r <= std::min(p, N - p); ++r) {
                    EXPECT_TRUE(hahn_recurrence_residual(N, p, r, x).is_zero());
                    if (N <= 8) {
                        for (int q = 2; q <= 3; ++q) {
                            EXPECT_TRUE(q_hahn_recurrence_residual(N, p, q, r, x).is_zero());
                        }
                    }
                }
            }
        }
    }
}

TEST(OrthopolyProperty, DegreeOneShiftsVanishOnGrid)
{
    for (int n = 2; n <= 10; ++n) {
        for (int k = 1; k < n; ++k) {
            for (int i = 0; i < k && n - i >= 2; ++i) {
                for (int y = 0; y <= std::min(k - i, n - k); ++y) {
                    EXPECT_TRUE(hahn_degree_one_shift_residual(n, k, i, y).is_zero());
                    if (n <= 8) {
                        for (int q = 2; q <= 3; ++q) {
                            EXPECT_TRUE(q_hahn_degree_one_shift_residual(n, k, q, i, y).is_zero());
                        }
                    }
                }
            }
        }
    }
}

} // namespace
} // namespace atlas
