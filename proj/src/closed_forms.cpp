#include "scheme_atlas/closed_forms.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "scheme_atlas/orthopoly.hpp"
#include "scheme_atlas/qarith.hpp"

namespace atlas {

namespace {

bool in_range(int x, int bound) { return x >= 0 && x <= bound; }

Rational R(long v) { return Rational(v); }

// Guarded quotient: a vanishing numerator gives 0 whatever the denominator.
Rational frac(const Rational& num, const Rational& den) { return quotient_or_zero(num, den); }

struct QArith {
    int q;
    [[nodiscard]] Rational operator[](long k) const { return q_number_signed(k, q); }
    [[nodiscard]] Rational pow(long e) const { return rational_pow(q, e); }
};

const MultiIndex kFirst{1, 0};
const MultiIndex kSecond{0, 1};

void require_direction(const MultiIndex& direction)
{
    if (direction != kFirst && direction != kSecond) {
        throw std::invalid_argument("closed-form Krein: direction must be (1,0) or (0,1), got " + direction.str());
    }
}

} // namespace

Rational hamming_closed_krein(int k, int y, int r, int i, int s)
{
    const int len = k - y;
    if (!in_range(i, len) || !in_range(s, len)) {
        return 0;
    }
    if (s == i - 1) {
        return R(static_cast<long>(len - i + 1) * (r - 2));
    }
    if (s == i) {
        return R(static_cast<long>(i) * (r - 3));
    }
    if (s == i + 1) {
        return R(i + 1);
    }
    return 0;
}

Rational johnson_diagonal_krein(int n, int k, int i, int j)
{
    const Rational scale = R(static_cast<long>(n - i) * (n - i - 1)) / R(static_cast<long>(k - i) * (n - k) * (n - i - 2 * j + 1));
    const Rational down = frac(R(static_cast<long>(k - i - j) * (n - i - j + 1) * (n - k - j)), R(n - i - 2 * j));
    const Rational up = frac(R(static_cast<long>(j) * (k - i - j + 1) * (n - k - j + 1)), R(n - i - 2 * j + 2));
    return R(n - i - 1) - scale * (down + up);
}

Rational johnson_closed_krein(int n, int k, int i, int j, int s)
{
    const int d = std::min(k - i, n - k);
    if (!in_range(j, d) || !in_range(s, d)) {
        return 0;
    }
    const long top = static_cast<long>(n - i) * (n - i - 1);
    const long base = static_cast<long>(k - i) * (n - k);
    if (s == j - 1) {
        return frac(R(top * (k - i - j + 1) * (n - i - j + 2) * (n - k - j + 1)),
                    R(base * (n - i - 2 * j + 2) * (n - i - 2 * j + 3)));
    }
    if (s == j) {
        return johnson_diagonal_krein(n, k, i, j);
    }
    if (s == j + 1) {
        return frac(R(top * (j + 1) * (k - i - j) * (n - k - j)), R(base * (n - i - 2 * j) * (n - i - 2 * j - 1)));
    }
    return 0;
}

Rational bilinear_closed_krein(int m, int y, int l, int q, int i, int s)
{
    const int len = m - y;
    const int d = std::min(len, l);
    if (!in_range(i, d) || !in_range(s, d)) {
        return 0;
    }
    const QArith b{q};
    if (s == i - 1) {
        return b.pow(2 * i - 2) * R(q - 1) * b[l - i + 1] * b[len - i + 1];
    }
    if (s == i) {
        return b[i] * (b.pow(len) + b.pow(l) - b.pow(i) - b.pow(i - 1) - 1);
    }
    if (s == i + 1) {
        return b.pow(i) * b[i + 1];
    }
    return 0;
}

Rational grassmann_lowering_part(int n, int m, int q, int i, int j)
{
    const QArith b{q};
    return frac(b[m - i - j] * b[n - i - j + 1] * b[n - m - j], b.pow(j) * b[n - i - 2 * j] * b[n - i - 2 * j + 1]);
}

Rational grassmann_raising_part(int n, int m, int q, int i, int j)
{
    const QArith b{q};
    return frac(b[j] * b[n - m - j + 1] * b[m - i - j + 1], b.pow(j) * b[n - i - 2 * j + 2] * b[n - i - 2 * j + 1]);
}

Rational grassmann_diagonal_part(int n, int m, int q, int i, int j)
{
    const QArith b{q};
    return b[n - m] * b[m - i] / b[n - i] - grassmann_lowering_part(n, m, q, i, j)
        - grassmann_raising_part(n, m, q, i, j);
}

Rational grassmann_closed_krein(int n, int m, int q, int i, int j, int t)
{
    const int d = std::min(m - i, n - m);
    if (!in_range(j, d) || !in_range(t, d)) {
        return 0;
    }
    const Rational lead = h_star(n - i, m - i, q);
    if (t == j - 1) {
        return lead * grassmann_lowering_part(n, m, q, i, j - 1);
    }
    if (t == j) {
        return lead * grassmann_diagonal_part(n, m, q, i, j);
    }
    if (t == j + 1) {
        return lead * grassmann_raising_part(n, m, q, i, j + 1);
    }
    return 0;
}

std::vector<MultiIndex> nonbinary_johnson_krein_support(const MultiIndex& direction, const MultiIndex& from)
{
    require_direction(direction);
    const int i = from[0];
    const int j = from[1];
    if (direction == kFirst) {
        return {{i + 1, j}, {i + 1, j - 1}, {i, j}, {i - 1, j + 1}, {i - 1, j}};
    }
    return {{i, j + 1}, {i, j}, {i, j - 1}};
}

std::vector<MultiIndex> attenuated_krein_support(const MultiIndex& direction, const MultiIndex& from)
{
    require_direction(direction);
    const int i = from[0];
    const int j = from[1];
    if (direction == kFirst) {
        return {{i + 1, j}, {i + 1, j - 1}, {i, j + 1}, {i, j}, {i, j - 1}, {i - 1, j + 1}, {i - 1, j}};
    }
    return {{i, j + 1}, {i, j}, {i, j - 1}};
}

Rational nonbinary_johnson_closed_krein(int r, int n, int k, const MultiIndex& direction, const MultiIndex& from,
                                        const MultiIndex& to)
{
    require_direction(direction);
    const Domain domain = nonbinary_johnson_domain(r, n, k);
    (void)domain.require_position(from);
    (void)domain.require_position(to);
    const long i = from[0];
    const long j = from[1];
    const MultiIndex delta = to - from;
    if (direction == kFirst) {
        if (delta == MultiIndex{0, 0}) {
            return R(n * i * (r - 3)) / R(k);
        }
        if (delta == MultiIndex{1, 0}) {
            return frac(R(n * (i + 1) * (k - i - j)), R(k * (n - i - 2 * j)));
        }
        if (delta == MultiIndex{1, -1}) {
            return frac(R(n * (i + 1) * (n - k - j + 1)), R(k * (n - i - 2 * j + 2)));
        }
        if (delta == MultiIndex{-1, 0}) {
            return frac(R(n * (r - 2) * (n - i - j + 2) * (k - i - j + 1)), R(k * (n - i - 2 * j + 2)));
        }
        if (delta == MultiIndex{-1, 1}) {
            return frac(R(n * (r - 2) * (j + 1) * (n - k - j)), R(k * (n - i - 2 * j)));
        }
        return 0;
    }
    const long base = static_cast<long>(k) * (n - k);
    if (delta == MultiIndex{0, 0}) {
        const Rational down = frac(R((k - i - j) * (n - i - j + 1) * (n - k - j)), R(n - i - 2 * j));
        const Rational up = frac(R(j * (k - i - j + 1) * (n - k - j + 1)), R(n - i - 2 * j + 2));
        return R(n - 1) - R(static_cast<long>(n) * (n - 1)) / R(base * (n - i - 2 * j + 1)) * (down + up);
    }
    if (delta == MultiIndex{0, -1}) {
        return frac(R(static_cast<long>(n) * (n - 1) * (k - i - j + 1) * (n - i - j + 2) * (n - k - j + 1)),
                    R(base * (n - i - 2 * j + 2) * (n - i - 2 * j + 3)));
    }
    if (delta == MultiIndex{0, 1}) {
        return frac(R(static_cast<long>(n) * (n - 1) * (j + 1) * (k - i - j) * (n - k - j)),
                    R(base * (n - i - 2 * j) * (n - i - 2 * j - 1)));
    }
    return 0;
}

Rational attenuated_closed_krein(int n, int m, int l, int q, const MultiIndex& direction, const MultiIndex& from,
                                 const MultiIndex& to)
{
    require_direction(direction);
    const Domain domain = attenuated_domain(n, m, l);
    (void)domain.require_position(from);
    (void)domain.require_position(to);
    const int i = from[0];
    const int j = from[1];
    const MultiIndex delta = to - from;
    const QArith b{q};
    const Rational q1 = R(q - 1);
    // Shared bracket of both diagonal entries.
    auto bracket = [&] {
        return frac(b[m - i - j] * b[n - i - j + 1] * b[n - m - j], b[n - i - 2 * j])
            + frac(b[j] * b[n - m - j + 1] * b[m - i - j + 1], b[n - i - 2 * j + 2]);
    };
    if (direction == kFirst) {
        if (delta == MultiIndex{1, 0}) {
            return frac(b.pow(i) * b[i + 1] * b[n] * b[m - i - j], b[m] * b[n - i - 2 * j]);
        }
        if (delta == MultiIndex{1, -1}) {
            return frac(b.pow(m - j + 1) * b[i + 1] * b[n] * b[n - m - j + 1], b[m] * b[n - i - 2 * j + 2]);
        }
        if (delta == MultiIndex{-1, 0}) {
            return frac(b.pow(2 * i - 2) * q1 * b[l - i + 1] * b[n] * b[m - i - j + 1] * b[n - i - j + 2],
                        b[m] * b[n - i - 2 * j + 2]);
        }
        if (delta == MultiIndex{-1, 1}) {
            return frac(b.pow(m + i - j - 2) * q1 * b[l - i + 1] * b[n] * b[j + 1] * b[n - m - j],
                        b[m] * b[n - i - 2 * j]);
        }
        if (delta == MultiIndex{0, -1}) {
            return frac(b.pow(m - j + 1) * q1 * b[n] * b[i] * b[m - i - j + 1] * b[n - m - j + 1] * b[n - i - j + 2],
                        b[m] * b[n - i - 2 * j + 2] * b[n - i - 2 * j + 3]);
        }
        if (delta == MultiIndex{0, 1}) {
            return frac(b.pow(m - j - 1) * q1 * b[n] * b[i] * b[j + 1] * b[n - m - j] * b[m - i - j],
                        b[m] * b[n - i - 2 * j] * b[n - i - 2 * j - 1]);
        }
        if (delta == MultiIndex{0, 0}) {
            const Rational mixed = -b.pow(m - j) * q1 * b[n] * b[i] / (b[m] * b[n - i - 2 * j + 1]) * bracket();
            return mixed + (b.pow(m) + b.pow(l) - b.pow(i) - b.pow(i - 1) - 1) * b[n] * b[i] / b[m];
        }
        return 0;
    }
    if (delta == MultiIndex{0, -1}) {
        return frac(b[n] * b[n - 1] * b[m - i - j + 1] * b[n - m - j + 1] * b[n - i - j + 2],
                    b.pow(j - 2) * b[n - m] * b[m] * b[n - i - 2 * j + 2] * b[n - i - 2 * j + 3]);
    }
    if (delta == MultiIndex{0, 1}) {
        return frac(b[n] * b[n - 1] * b[j + 1] * b[n - m - j] * b[m - i - j],
                    b.pow(j) * b[n - m] * b[m] * b[n - i - 2 * j] * b[n - i - 2 * j - 1]);
    }
    if (delta == MultiIndex{0, 0}) {
        return R(q) * b[n - 1] - b[n] * b[n - 1] / (b.pow(j - 1) * b[n - m] * b[m] * b[n - i - 2 * j + 1]) * bracket();
    }
    return 0;
}

std::string ClosedFormEntry::str() const
{
    return "q^" + to.str() + "_{" + direction.str() + "," + from.str() + "}: closed form " + closed_form.str()
        + ", spectral " + spectral.str();
}

namespace {

using ClosedFn = std::function<Rational(const MultiIndex&, const MultiIndex&, const MultiIndex&)>;
using SupportFn = std::function<std::vector<MultiIndex>(const MultiIndex&, const MultiIndex&)>;

std::vector<MultiIndex> univariate_support(const MultiIndex&, const MultiIndex& from)
{
    return {{from[0] - 1}, {from[0]}, {from[0] + 1}};
}

void bind_family(const FamilyParams& p, ClosedFn& closed, SupportFn& support)
{
    switch (p.family) {
    case Family::hamming:
        closed = [p](const MultiIndex&, const MultiIndex& a, const MultiIndex& b) {
            return hamming_closed_krein(p.n, 0, p.q + 1, a[0], b[0]);
        };
        support = univariate_support;
        return;
    case Family::johnson:
        closed = [p](const MultiIndex&, const MultiIndex& a, const MultiIndex& b) {
            return johnson_closed_krein(p.n, p.k, 0, a[0], b[0]);
        };
        support = univariate_support;
        return;
    case Family::bilinear:
        closed = [p](const MultiIndex&, const MultiIndex& a, const MultiIndex& b) {
            return bilinear_closed_krein(p.n, 0, p.l, p.q, a[0], b[0]);
        };
        support = univariate_support;
        return;
    case Family::grassmann:
        closed = [p](const MultiIndex&, const MultiIndex& a, const MultiIndex& b) {
            return grassmann_closed_krein(p.n, p.m, p.q, 0, a[0], b[0]);
        };
        support = univariate_support;
        return;
    case Family::nonbinary_johnson:
        closed = [p](const MultiIndex& g, const MultiIndex& a, const MultiIndex& b) {
            return nonbinary_johnson_closed_krein(p.r, p.n, p.k, g, a, b);
        };
        support = nonbinary_johnson_krein_support;
        return;
    case Family::attenuated:
        closed = [p](const MultiIndex& g, const MultiIndex& a, const MultiIndex& b) {
            return attenuated_closed_krein(p.n, p.m, p.l, p.q, g, a, b);
        };
        support = attenuated_krein_support;
        return;
    }
}

} // namespace

ClosedFormReport verify_closed_forms(const FamilyParams& params)
{
    const SpectralTable table = make_table(params);
    return verify_closed_forms(params, table, krein_tensor(table));
}

ClosedFormReport verify_closed_forms(const FamilyParams& params, const SpectralTable& table, const KreinTensor& krein)
{
    params.validate();
    ClosedFormReport report;
    report.params = params;
    report.reduction = table.reduction();
    ClosedFn closed;
    SupportFn support;
    bind_family(params, closed, support);

    const Domain& domain = table.idempotents();
    const std::size_t dim = domain.dimension();
    for (std::size_t axis = 0; axis < dim; ++axis) {
        const MultiIndex gen = MultiIndex::unit(dim, axis);
        const auto g = domain.position(gen);
        if (!g) {
            continue;
        }
        for (std::size_t a = 0; a < domain.size(); ++a) {
            const MultiIndex& from = domain.at(a);
            const auto listed = support(gen, from);
            for (std::size_t c = 0; c < domain.size(); ++c) {
                const MultiIndex& to = domain.at(c);
                const Rational& spectral = krein(*g, a, c);
                ++report.entries_checked;
                const bool in_support = std::find(listed.begin(), listed.end(), to) != listed.end();
                if (!in_support) {
                    if (!spectral.is_zero()) {
                        report.support_violations.push_back({gen, from, to, Rational(0), spectral});
                    }
                    continue;
                }
                Rational value;
                try {
                    value = closed(gen, from, to);
                } catch (const std::domain_error& e) {
                    report.evaluation_errors.push_back("q^" + to.str() + "_{" + gen.str() + "," + from.str()
                                                       + "}: " + e.what());
                    continue;
                }
                if (value != spectral) {
                    report.value_mismatches.push_back({gen, from, to, value, spectral});
                }
            }
        }
    }
    report.q_polynomial = check_q_polynomial(table, domain, MonomialOrder::grlex(), krein);
    return report;
}

} // namespace atlas
