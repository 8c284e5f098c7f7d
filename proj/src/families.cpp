#include "scheme_atlas/families.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "scheme_atlas/orthopoly.hpp"
#include "scheme_atlas/qarith.hpp"

namespace atlas {

std::string_view to_string(Family family)
{
    switch (family) {
    case Family::hamming: return "hamming";
    case Family::johnson: return "johnson";
    case Family::bilinear: return "bilinear";
    case Family::grassmann: return "grassmann";
    case Family::nonbinary_johnson: return "nonbinary_johnson";
    case Family::attenuated: return "attenuated";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name)
{
    for (Family f : {Family::hamming, Family::johnson, Family::bilinear, Family::grassmann, Family::nonbinary_johnson,
                     Family::attenuated}) {
        if (name == to_string(f)) {
            return f;
        }
    }
    if (name == "nbj") {
        return Family::nonbinary_johnson;
    }
    return std::nullopt;
}

namespace {

void require(bool condition, const FamilyParams& p, const char* what)
{
    if (!condition) {
        throw std::invalid_argument(p.str() + ": " + what);
    }
}

} // namespace

void FamilyParams::validate() const
{
    switch (family) {
    case Family::hamming:
        require(n >= 1 && q >= 2, *this, "requires n >= 1, q >= 2");
        break;
    case Family::johnson:
        require(0 < k && k < n, *this, "requires 0 < k < n");
        break;
    case Family::bilinear:
        require(n >= 1 && l >= 1 && q >= 2, *this, "requires n, l >= 1, q >= 2");
        break;
    case Family::grassmann:
        require(0 < m && m < n && q >= 2, *this, "requires 0 < m < n, q >= 2");
        break;
    case Family::nonbinary_johnson:
        require(r >= 2 && 0 < k && k <= n, *this, "requires r >= 2, 0 < k <= n");
        break;
    case Family::attenuated:
        require(1 <= m && m <= n && l >= 1 && q >= 2, *this, "requires 1 <= m <= n, l >= 1, q >= 2");
        break;
    }
}

Reduction FamilyParams::reduction() const
{
    if (family == Family::nonbinary_johnson) {
        if (r == 2) {
            return Reduction::johnson;
        }
        if (n == k) {
            return Reduction::hamming;
        }
    }
    if (family == Family::attenuated && m == n) {
        return Reduction::bilinear;
    }
    return Reduction::none;
}

std::string FamilyParams::str() const
{
    auto field = [](const char* name, int v) { return std::string(name) + "=" + std::to_string(v); };
    std::string body;
    switch (family) {
    case Family::hamming: body = field("n", n) + "," + field("q", q); break;
    case Family::johnson: body = field("n", n) + "," + field("k", k); break;
    case Family::bilinear: body = field("n", n) + "," + field("l", l) + "," + field("q", q); break;
    case Family::grassmann: body = field("n", n) + "," + field("m", m) + "," + field("q", q); break;
    case Family::nonbinary_johnson: body = field("r", r) + "," + field("n", n) + "," + field("k", k); break;
    case Family::attenuated:
        body = field("q", q) + "," + field("n", n) + "," + field("m", m) + "," + field("l", l);
        break;
    }
    return std::string(to_string(family)) + "(" + body + ")";
}

Domain nonbinary_johnson_domain(int r, int n, int k)
{
    std::vector<MultiIndex> members;
    const int jmax = std::min(k, n - k);
    const int imax = r == 2 ? 0 : k;
    for (int j = 0; j <= jmax; ++j) {
        for (int i = 0; i <= std::min(imax, k - j); ++i) {
            members.push_back({i, j});
        }
    }
    return Domain(std::move(members));
}

Domain attenuated_domain(int n, int m, int l)
{
    std::vector<MultiIndex> members;
    for (int a = 0; a <= std::min(l, m); ++a) {
        for (int b = 0; b <= std::min(n - m, m - a); ++b) {
            members.push_back({a, b});
        }
    }
    return Domain(std::move(members));
}

namespace {

using Entry = std::function<Rational(const MultiIndex&, const MultiIndex&)>;
using Weight = std::function<Rational(const MultiIndex&)>;

SpectralTable assemble(const FamilyParams& params, Integer size, const Domain& domain, const Entry& p_entry,
                       const Entry& q_entry, const Weight& valency, const Weight& multiplicity)
{
    const auto d = static_cast<Eigen::Index>(domain.size());
    RationalMatrix P(d, d);
    RationalMatrix Q(d, d);
    RationalVector k(d);
    RationalVector m(d);
    for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) {
            P(a, b) = p_entry(domain.at(a), domain.at(b));
            Q(a, b) = q_entry(domain.at(a), domain.at(b));
        }
        k(a) = valency(domain.at(a));
        m(a) = multiplicity(domain.at(a));
    }
    return SpectralTable(params.str(), std::move(size), domain, domain, std::move(P), std::move(Q), std::move(k),
                         std::move(m), params.reduction());
}

Integer bilinear_valency(int n, int l, int q, int i)
{
    return q_binomial(n, i, q) * q_binomial(l, i, q) * q_falling_product(i, q);
}

} // namespace

SpectralTable hamming_table(int n, int q)
{
    const auto params = FamilyParams::hamming(n, q);
    params.validate();
    auto kraw = [=](const MultiIndex& a, const MultiIndex& b) { return krawtchouk(a[0], n, q, b[0]); };
    auto weight = [=](const MultiIndex& a) { return Rational(int_pow(q - 1, a[0]) * binomial(n, a[0])); };
    return assemble(params, int_pow(q, n), Domain::interval(n), kraw, kraw, weight, weight);
}

SpectralTable johnson_table(int n, int k)
{
    const auto params = FamilyParams::johnson(n, k);
    params.validate();
    return assemble(
        params, binomial(n, k), Domain::interval(std::min(k, n - k)),
        [=](const MultiIndex& a, const MultiIndex& b) { return eberlein(a[0], n, k, b[0]); },
        [=](const MultiIndex& a, const MultiIndex& b) { return hahn(a[0], n, k, b[0]); },
        [=](const MultiIndex& a) { return Rational(binomial(k, a[0]) * binomial(n - k, a[0])); },
        [=](const MultiIndex& a) { return Rational(binomial(n, a[0]) - binomial(n, a[0] - 1)); });
}

SpectralTable bilinear_table(int n, int l, int q)
{
    const auto params = FamilyParams::bilinear(n, l, q);
    params.validate();
    auto kraw = [=](const MultiIndex& a, const MultiIndex& b) { return gen_krawtchouk(a[0], n, l, q, b[0]); };
    auto weight = [=](const MultiIndex& a) { return Rational(bilinear_valency(n, l, q, a[0])); };
    return assemble(params, int_pow(q, static_cast<long>(n) * l), Domain::interval(std::min(n, l)), kraw, kraw,
                    weight, weight);
}

SpectralTable grassmann_table(int n, int m, int q)
{
    const auto params = FamilyParams::grassmann(n, m, q);
    params.validate();
    return assemble(
        params, q_binomial(n, m, q), Domain::interval(std::min(m, n - m)),
        [=](const MultiIndex& a, const MultiIndex& b) { return gen_eberlein(a[0], n, m, q, b[0]); },
        [=](const MultiIndex& a, const MultiIndex& b) { return q_hahn(a[0], n, m, q, b[0]); },
        [=](const MultiIndex& a) {
            return Rational(int_pow(q, static_cast<long>(a[0]) * a[0]) * q_binomial(n - m, a[0], q)
                            * q_binomial(m, a[0], q));
        },
        [=](const MultiIndex& a) { return Rational(q_binomial(n, a[0], q) - q_binomial(n, a[0] - 1, q)); });
}

SpectralTable nonbinary_johnson_table(int r, int n, int k)
{
    const auto params = FamilyParams::nonbinary_johnson(r, n, k);
    params.validate();
    // With r = 2 the first coordinate of every index is 0 and the
    // Krawtchouk factor is the constant 1 (its alphabet size would be 1).
    auto kraw = [=](int i, int len, int x) { return r == 2 ? Rational(1) : krawtchouk(i, len, r - 1, x); };
    auto hamming_share = [=](int i) { return Rational(binomial(n, i), binomial(k, i)); };
    return assemble(
        params, int_pow(r - 1, k) * binomial(n, k), nonbinary_johnson_domain(r, n, k),
        [=](const MultiIndex& a, const MultiIndex& b) {
            return Rational(int_pow(r - 1, a[1])) * kraw(a[0], k - a[1], b[0]) * eberlein(a[1], n - b[0], k - b[0], b[1]);
        },
        [=](const MultiIndex& a, const MultiIndex& b) {
            return hamming_share(a[0]) * kraw(a[0], k - b[1], b[0]) * hahn(a[1], n - a[0], k - a[0], b[1]);
        },
        [=](const MultiIndex& a) {
            return Rational(int_pow(r - 1, a[1]) * int_pow(r - 2, a[0]) * binomial(k - a[1], a[0]) * binomial(k, a[1])
                            * binomial(n - k, a[1]));
        },
        [=](const MultiIndex& a) {
            return hamming_share(a[0]) * Rational(int_pow(r - 2, a[0]) * binomial(k, a[0]))
                * Rational(binomial(n - a[0], a[1]) - binomial(n - a[0], a[1] - 1));
        });
}

SpectralTable attenuated_table(int n, int m, int l, int q)
{
    const auto params = FamilyParams::attenuated(n, m, l, q);
    params.validate();
    auto grassmann_share = [=](int a) { return Rational(q_binomial(n, m, q), q_binomial(n - a, m - a, q)); };
    return assemble(
        params, int_pow(q, static_cast<long>(m) * l) * q_binomial(n, m, q), attenuated_domain(n, m, l),
        [=](const MultiIndex& a, const MultiIndex& b) {
            return Rational(int_pow(q, static_cast<long>(a[1]) * l)) * gen_krawtchouk(a[0], m - a[1], l, q, b[0])
                * gen_eberlein(a[1], n - b[0], m - b[0], q, b[1]);
        },
        [=](const MultiIndex& a, const MultiIndex& b) {
            return grassmann_share(a[0]) * gen_krawtchouk(a[0], m - b[1], l, q, b[0])
                * q_hahn(a[1], n - a[0], m - a[0], q, b[1]);
        },
        [=](const MultiIndex& a) {
            return Rational(int_pow(q, static_cast<long>(a[1]) * l) * bilinear_valency(m - a[1], l, q, a[0])
                            * int_pow(q, static_cast<long>(a[1]) * a[1]) * q_binomial(n - m, a[1], q)
                            * q_binomial(m, a[1], q));
        },
        [=](const MultiIndex& a) {
            return grassmann_share(a[0]) * Rational(bilinear_valency(m, l, q, a[0]))
                * Rational(q_binomial(n - a[0], a[1], q) - q_binomial(n - a[0], a[1] - 1, q));
        });
}

SpectralTable make_table(const FamilyParams& p)
{
    switch (p.family) {
    case Family::hamming: return hamming_table(p.n, p.q);
    case Family::johnson: return johnson_table(p.n, p.k);
    case Family::bilinear: return bilinear_table(p.n, p.l, p.q);
    case Family::grassmann: return grassmann_table(p.n, p.m, p.q);
    case Family::nonbinary_johnson: return nonbinary_johnson_table(p.r, p.n, p.k);
    case Family::attenuated: return attenuated_table(p.n, p.m, p.l, p.q);
    }
    throw std::invalid_argument("make_table: unknown family");
}

Integer point_count(const FamilyParams& p)
{
    p.validate();
    switch (p.family) {
    case Family::hamming: return int_pow(p.q, p.n);
    case Family::johnson: return binomial(p.n, p.k);
    case Family::bilinear: return int_pow(p.q, static_cast<long>(p.n) * p.l);
    case Family::grassmann: return q_binomial(p.n, p.m, p.q);
    case Family::nonbinary_johnson: return int_pow(p.r - 1, p.k) * binomial(p.n, p.k);
    case Family::attenuated: return int_pow(p.q, static_cast<long>(p.m) * p.l) * q_binomial(p.n, p.m, p.q);
    }
    return 0;
}

std::optional<FamilyParams> reduced_family(const FamilyParams& params)
{
    switch (params.reduction()) {
    case Reduction::johnson: return FamilyParams::johnson(params.n, params.k);
    case Reduction::hamming: return FamilyParams::hamming(params.k, params.r - 1);
    case Reduction::bilinear: return FamilyParams::bilinear(params.n, params.l, params.q);
    case Reduction::none: break;
    }
    return std::nullopt;
}

std::vector<Discrepancy> reduction_mismatches(const FamilyParams& params)
{
    const auto reduced = reduced_family(params);
    if (!reduced) {
        throw std::invalid_argument("reduction_mismatches: " + params.str() + " has no reduction");
    }
    const SpectralTable full = make_table(params);
    const SpectralTable small = make_table(*reduced);
    std::vector<Discrepancy> out;
    if (full.size() != small.size()) {
        out.push_back({"size", {}, Rational(small.size()), Rational(full.size())});
    }

    // Image of each full index in the reduced domain, through the live coordinate.
    auto project = [&](const Domain& big, const Domain& target, const char* what) {
        std::vector<std::size_t> image;
        std::optional<std::size_t> live;
        for (std::size_t axis = 0; axis < big.dimension(); ++axis) {
            for (const auto& alpha : big) {
                if (alpha[axis] != 0) {
                    if (live && *live != axis) {
                        out.push_back({std::string(what) + " domain has two live coordinates", {alpha}, Rational(0),
                                       Rational(1)});
                        return image;
                    }
                    live = axis;
                }
            }
        }
        if (big.size() != target.size()) {
            out.push_back({std::string(what) + " domain size", {}, Rational(static_cast<long>(target.size())),
                           Rational(static_cast<long>(big.size()))});
            return image;
        }
        for (const auto& alpha : big) {
            const auto pos = target.position(MultiIndex{live ? alpha[*live] : 0});
            if (!pos) {
                out.push_back({std::string(what) + " index missing from the reduced domain", {alpha}, Rational(0),
                               Rational(1)});
                return std::vector<std::size_t>{};
            }
            image.push_back(*pos);
        }
        return image;
    };
    const auto rel = project(full.relations(), small.relations(), "relation");
    const auto idem = project(full.idempotents(), small.idempotents(), "idempotent");
    if (rel.size() != full.relations().size() || idem.size() != full.idempotents().size()) {
        return out;
    }
    auto ix = [](std::size_t i) { return static_cast<Eigen::Index>(i); };
    for (std::size_t a = 0; a < rel.size(); ++a) {
        const MultiIndex& alpha = full.relations().at(a);
        if (full.valencies()(ix(a)) != small.valencies()(ix(rel[a]))) {
            out.push_back({"valency", {alpha}, small.valencies()(ix(rel[a])), full.valencies()(ix(a))});
        }
        for (std::size_t b = 0; b < idem.size(); ++b) {
            const MultiIndex& beta = full.idempotents().at(b);
            if (full.P()(ix(a), ix(b)) != small.P()(ix(rel[a]), ix(idem[b]))) {
                out.push_back({"P", {alpha, beta}, small.P()(ix(rel[a]), ix(idem[b])), full.P()(ix(a), ix(b))});
            }
            if (full.Q()(ix(b), ix(a)) != small.Q()(ix(idem[b]), ix(rel[a]))) {
                out.push_back({"Q", {beta, alpha}, small.Q()(ix(idem[b]), ix(rel[a])), full.Q()(ix(b), ix(a))});
            }
        }
    }
    for (std::size_t b = 0; b < idem.size(); ++b) {
        if (full.multiplicities()(ix(b)) != small.multiplicities()(ix(idem[b]))) {
            out.push_back({"multiplicity", {full.idempotents().at(b)}, small.multiplicities()(ix(idem[b])),
                           full.multiplicities()(ix(b))});
        }
    }
    return out;
}

} // namespace atlas
