#include "scheme_atlas/leonard.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "scheme_atlas/polynomiality.hpp"

namespace atlas {

std::optional<int> is_simplex(const Domain& domain)
{
    if (domain.size() == 0) {
        return std::nullopt;
    }
    int bound = 0;
    for (const auto& alpha : domain) {
        bound = std::max(bound, alpha.degree());
    }
    if (domain == Domain::simplex(domain.dimension(), bound)) {
        return bound;
    }
    return std::nullopt;
}

bool adjacent(const MultiIndex& alpha, const MultiIndex& beta)
{
    const MultiIndex diff = alpha - beta;
    std::vector<int> nonzero;
    for (int v : diff.entries()) {
        if (v != 0) {
            nonzero.push_back(v);
        }
    }
    std::sort(nonzero.begin(), nonzero.end());
    return nonzero.empty() || nonzero == std::vector<int>{1} || nonzero == std::vector<int>{-1}
           || nonzero == std::vector<int>{-1, 1};
}

std::string AdjacencyViolation::str() const
{
    return std::string(1, side) + "^" + to.str() + "_{" + generator.str() + "," + from.str() + "} = " + value.str()
           + " at a non-adjacent index";
}

namespace {

std::string simplex_problem(const Domain& relations, const Domain& idempotents)
{
    if (!(relations == idempotents)) {
        return "relation and idempotent domains differ";
    }
    const auto bound = is_simplex(relations);
    if (!bound) {
        return "domain is not a simplex";
    }
    if (*bound < 1) {
        return "simplex of degree 0";
    }
    return {};
}

std::vector<std::size_t> generator_positions(const Domain& domain)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < domain.dimension(); ++i) {
        out.push_back(domain.require_position(MultiIndex::unit(domain.dimension(), i)));
    }
    return out;
}

} // namespace

AMPropertyReport check_AM_property(const SpectralTable& t, const IntersectionTensor& inter, const KreinTensor& krein,
                                   const std::vector<MonomialOrder>& orders)
{
    AMPropertyReport report;
    report.not_applicable = simplex_problem(t.relations(), t.idempotents());
    if (!report.applicable()) {
        return report;
    }
    const Domain& domain = t.relations();
    report.bound = *is_simplex(domain);

    for (const auto& order : orders) {
        if (!report.p_order && check_p_polynomial(t, domain, order, inter).verdict()) {
            report.p_order = order;
        }
        if (!report.q_order && check_q_polynomial(t, domain, order, krein).verdict()) {
            report.q_order = order;
        }
    }

    for (std::size_t g : generator_positions(domain)) {
        for (std::size_t a = 0; a < domain.size(); ++a) {
            for (std::size_t b = 0; b < domain.size(); ++b) {
                if (adjacent(domain.at(a), domain.at(b))) {
                    continue;
                }
                if (!inter(g, a, b).is_zero()) {
                    report.violations.push_back({'P', domain.at(g), domain.at(a), domain.at(b), inter(g, a, b)});
                }
                if (!krein(g, a, b).is_zero()) {
                    report.violations.push_back({'Q', domain.at(g), domain.at(a), domain.at(b), krein(g, a, b)});
                }
            }
        }
    }
    return report;
}

namespace {

Rational dot(const RationalVector& u, const RationalVector& v)
{
    Rational sum;
    for (Eigen::Index x = 0; x < u.size(); ++x) {
        if (!u(x).is_zero() && !v(x).is_zero()) {
            sum = sum + u(x) * v(x);
        }
    }
    return sum;
}

RationalVector apply_adjacency(const IntMatrix& A, const RationalVector& v)
{
    RationalVector out = RationalVector::Zero(v.size());
    for (Eigen::Index x = 0; x < A.rows(); ++x) {
        for (Eigen::Index z = 0; z < A.cols(); ++z) {
            if (A(x, z) != 0) {
                out(x) += v(z);
            }
        }
    }
    return out;
}

RationalMatrix as_columns(const std::vector<RationalVector>& vectors, Eigen::Index rows)
{
    RationalMatrix out(rows, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t c = 0; c < vectors.size(); ++c) {
        out.col(static_cast<Eigen::Index>(c)) = vectors[c];
    }
    return out;
}

// Entries of w with respect to an orthogonal family, checked by rebuilding w.
// Returns false when a basis vector is null or the rebuild misses w.
bool project(const RationalVector& w, const std::vector<RationalVector>& basis, const std::vector<Rational>& norms,
             RationalVector& coords)
{
    coords = RationalVector::Zero(static_cast<Eigen::Index>(basis.size()));
    RationalVector rebuilt = RationalVector::Zero(w.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (norms[k].is_zero()) {
            return false;
        }
        const Rational c = dot(w, basis[k]) / norms[k];
        coords(static_cast<Eigen::Index>(k)) = c;
        if (!c.is_zero()) {
            rebuilt += c * basis[k];
        }
    }
    return rebuilt == w;
}

} // namespace

PrincipalModule build_principal_module(const ConcreteScheme& s, const SpectralTable& t,
                                       const IdempotentSet& idempotents, std::size_t x0)
{
    if (x0 >= s.num_points()) {
        throw std::out_of_range("build_principal_module: base point " + std::to_string(x0) + " out of range");
    }
    if (!(s.classes() == t.relations()) || idempotents.matrices.size() != t.idempotents().size()) {
        throw std::invalid_argument("build_principal_module: scheme, table and idempotents are not aligned");
    }
    const auto N = static_cast<Eigen::Index>(s.num_points());
    const std::size_t d = t.relations().size();
    const std::size_t e = t.idempotents().size();
    const auto& P = t.P();
    const auto& Q = t.Q();
    const auto& rel = t.relations();
    const auto& idem = t.idempotents();
    auto ix = [](std::size_t i) { return static_cast<Eigen::Index>(i); };

    PrincipalModule pm;
    pm.base_point = x0;
    pm.relations = rel;
    pm.idempotents = idem;

    std::vector<std::size_t> shell(static_cast<std::size_t>(N));
    for (Eigen::Index x = 0; x < N; ++x) {
        shell[static_cast<std::size_t>(x)] = s.relation(x0, static_cast<std::size_t>(x));
    }
    for (std::size_t a = 0; a < d; ++a) {
        RationalVector v = RationalVector::Zero(N);
        for (Eigen::Index x = 0; x < N; ++x) {
            if (shell[static_cast<std::size_t>(x)] == a) {
                v(x) = Rational(1);
            }
        }
        pm.relation_vectors.push_back(std::move(v));
    }
    for (std::size_t b = 0; b < e; ++b) {
        pm.idempotent_vectors.push_back(idempotents.matrices[b].col(ix(x0)));
    }
    auto dual_apply = [&](std::size_t j, const RationalVector& w) {
        RationalVector out = w;
        for (Eigen::Index x = 0; x < N; ++x) {
            out(x) = Q(ix(j), ix(shell[static_cast<std::size_t>(x)])) * w(x);
        }
        return out;
    };
    auto& failures = pm.failures;
    auto first_difference = [&](const std::string& check, std::vector<MultiIndex> indices, const RationalVector& got,
                                const RationalVector& expected) {
        for (Eigen::Index x = 0; x < N; ++x) {
            if (got(x) != expected(x)) {
                indices.push_back(MultiIndex{static_cast<int>(x)});
                failures.push_back({check, std::move(indices), expected(x), got(x)});
                return;
            }
        }
    };

    const Rational size(t.size());
    first_difference("v*_0", {idem.at(t.trivial_idempotent())}, pm.idempotent_vectors[t.trivial_idempotent()],
                     RationalVector::Constant(N, reciprocal(size)));

    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t b = 0; b < e; ++b) {
            first_difference("T1", {rel.at(j), idem.at(b)}, apply_adjacency(s.adjacency(j), pm.idempotent_vectors[b]),
                             P(ix(j), ix(b)) * pm.idempotent_vectors[b]);
        }
    }
    for (std::size_t j = 0; j < e; ++j) {
        for (std::size_t a = 0; a < d; ++a) {
            first_difference("T2", {idem.at(j), rel.at(a)}, dual_apply(j, pm.relation_vectors[a]),
                             Q(ix(j), ix(a)) * pm.relation_vectors[a]);
        }
    }
    for (std::size_t b = 0; b < e; ++b) {
        RationalMatrix images(N, ix(d));
        for (std::size_t k = 0; k < d; ++k) {
            images.col(ix(k)) = idempotents.matrices[b] * pm.relation_vectors[k];
        }
        if (auto r = exact_rank(images); r != 1) {
            failures.push_back({"T3", {idem.at(b)}, Rational(1), Rational(static_cast<long>(r))});
        }
    }
    for (std::size_t a = 0; a < d; ++a) {
        RationalMatrix images(N, ix(e));
        for (std::size_t k = 0; k < e; ++k) {
            RationalVector w = RationalVector::Zero(N);
            for (Eigen::Index x = 0; x < N; ++x) {
                if (shell[static_cast<std::size_t>(x)] == a) {
                    w(x) = pm.idempotent_vectors[k](x);
                }
            }
            images.col(ix(k)) = w;
        }
        if (auto r = exact_rank(images); r != 1) {
            failures.push_back({"T4", {rel.at(a)}, Rational(1), Rational(static_cast<long>(r))});
        }
    }
    for (std::size_t a = 0; a < d; ++a) {
        RationalVector combo = RationalVector::Zero(N);
        for (std::size_t b = 0; b < e; ++b) {
            combo += P(ix(a), ix(b)) * pm.idempotent_vectors[b];
        }
        first_difference("change of basis", {rel.at(a)}, pm.relation_vectors[a], combo);
    }

    std::vector<Rational> rel_norms;
    std::vector<Rational> idem_norms;
    for (const auto& v : pm.relation_vectors) {
        rel_norms.push_back(dot(v, v));
    }
    for (const auto& v : pm.idempotent_vectors) {
        idem_norms.push_back(dot(v, v));
    }
    auto coordinates = [&](const RationalVector& w, bool on_relation_basis, std::vector<MultiIndex> where) {
        RationalVector coords;
        const bool ok = on_relation_basis ? project(w, pm.relation_vectors, rel_norms, coords)
                                          : project(w, pm.idempotent_vectors, idem_norms, coords);
        if (!ok) {
            failures.push_back({"projection", std::move(where), Rational(0), Rational(1)});
        }
        return coords;
    };

    for (std::size_t j = 0; j < d; ++j) {
        RationalMatrix on_idem(ix(e), ix(e));
        RationalMatrix on_rel(ix(d), ix(d));
        for (std::size_t b = 0; b < e; ++b) {
            on_idem.col(ix(b)) =
                coordinates(apply_adjacency(s.adjacency(j), pm.idempotent_vectors[b]), false, {rel.at(j), idem.at(b)});
        }
        for (std::size_t a = 0; a < d; ++a) {
            on_rel.col(ix(a)) =
                coordinates(apply_adjacency(s.adjacency(j), pm.relation_vectors[a]), true, {rel.at(j), rel.at(a)});
        }
        pm.adjacency_on_idempotent_basis.push_back(std::move(on_idem));
        pm.adjacency_on_relation_basis.push_back(std::move(on_rel));
    }
    for (std::size_t j = 0; j < e; ++j) {
        RationalMatrix on_idem(ix(e), ix(e));
        RationalMatrix on_rel(ix(d), ix(d));
        for (std::size_t b = 0; b < e; ++b) {
            on_idem.col(ix(b)) = coordinates(dual_apply(j, pm.idempotent_vectors[b]), false, {idem.at(j), idem.at(b)});
        }
        for (std::size_t a = 0; a < d; ++a) {
            on_rel.col(ix(a)) = coordinates(dual_apply(j, pm.relation_vectors[a]), true, {idem.at(j), rel.at(a)});
        }
        pm.dual_adjacency_on_idempotent_basis.push_back(std::move(on_idem));
        pm.dual_adjacency_on_relation_basis.push_back(std::move(on_rel));
    }

    const IntersectionTensor& inter = s.intersection_numbers();
    const KreinTensor krein = krein_tensor(t);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                if (pm.adjacency_on_relation_basis[j](ix(k), ix(i)) != inter(j, i, k)) {
                    failures.push_back({"T5", {rel.at(j), rel.at(i), rel.at(k)}, inter(j, i, k),
                                        pm.adjacency_on_relation_basis[j](ix(k), ix(i))});
                }
            }
        }
    }
    for (std::size_t j = 0; j < e; ++j) {
        for (std::size_t i = 0; i < e; ++i) {
            for (std::size_t k = 0; k < e; ++k) {
                if (pm.dual_adjacency_on_idempotent_basis[j](ix(k), ix(i)) != krein(j, i, k)) {
                    failures.push_back({"T6", {idem.at(j), idem.at(i), idem.at(k)}, krein(j, i, k),
                                        pm.dual_adjacency_on_idempotent_basis[j](ix(k), ix(i))});
                }
            }
        }
    }
    return pm;
}

bool LeonardReport::passed() const
{
    if (!not_applicable.empty() || !tensor_mismatches.empty() || conditions.empty()) {
        return false;
    }
    return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.passed; });
}

namespace {

std::string matrix_entry_text(const char* name, const MultiIndex& generator, const MultiIndex& row,
                              const MultiIndex& col, const Rational& value)
{
    return std::string(name) + "_" + generator.str() + "[" + row.str() + "," + col.str() + "] = " + value.str();
}

// Diagonal generator matrices with linearly independent diagonals.
void check_commuting_span(LeonardCondition& cond, const char* name, const Domain& domain,
                          const std::vector<std::size_t>& gens, const std::vector<RationalMatrix>& mats)
{
    const auto n = static_cast<Eigen::Index>(domain.size());
    RationalMatrix diagonals(static_cast<Eigen::Index>(gens.size()), n);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const auto& m = mats[gens[g]];
        for (Eigen::Index r = 0; r < n; ++r) {
            for (Eigen::Index c = 0; c < n; ++c) {
                if (r != c && !m(r, c).is_zero()) {
                    cond.passed = false;
                    cond.witnesses.push_back("not diagonal: "
                                             + matrix_entry_text(name, domain.at(gens[g]), domain.at(r), domain.at(c),
                                                                 m(r, c)));
                }
            }
            diagonals(static_cast<Eigen::Index>(g), r) = m(r, r);
        }
    }
    if (auto r = exact_rank(diagonals); r != static_cast<Eigen::Index>(gens.size())) {
        cond.passed = false;
        cond.witnesses.push_back(std::string("span of ") + name + " has dimension " + std::to_string(r));
    }
}

// Pairs of indices with equal joint eigenvalues on the generators.
std::vector<std::string> eigenvalue_collisions(const Domain& domain, const std::vector<std::size_t>& gens,
                                               const std::vector<RationalMatrix>& mats)
{
    std::map<std::vector<Rational>, std::size_t> seen;
    std::vector<std::string> out;
    for (std::size_t a = 0; a < domain.size(); ++a) {
        std::vector<Rational> joint;
        for (std::size_t g : gens) {
            joint.push_back(mats[g](static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)));
        }
        auto [it, inserted] = seen.emplace(std::move(joint), a);
        if (!inserted) {
            out.push_back("joint eigenspace shared by " + domain.at(it->second).str() + " and " + domain.at(a).str());
        }
    }
    return out;
}

void check_adjacent_support(LeonardCondition& cond, const char* name, const Domain& domain,
                            const std::vector<std::size_t>& gens, const std::vector<RationalMatrix>& mats)
{
    const auto n = static_cast<Eigen::Index>(domain.size());
    for (std::size_t g : gens) {
        for (Eigen::Index c = 0; c < n; ++c) {
            for (Eigen::Index r = 0; r < n; ++r) {
                if (!mats[g](r, c).is_zero() && !adjacent(domain.at(r), domain.at(c))) {
                    cond.passed = false;
                    cond.witnesses.push_back("non-adjacent support: "
                                             + matrix_entry_text(name, domain.at(g), domain.at(r), domain.at(c),
                                                                 mats[g](r, c)));
                }
            }
        }
    }
}

void fail_with(LeonardCondition& cond, const std::vector<std::string>& witnesses)
{
    if (!witnesses.empty()) {
        cond.passed = false;
        cond.witnesses.insert(cond.witnesses.end(), witnesses.begin(), witnesses.end());
    }
}

} // namespace

LeonardReport verify_leonard_pair(const PrincipalModule& pm, const KreinTensor& krein, const IntersectionTensor& inter)
{
    LeonardReport report;
    report.not_applicable = simplex_problem(pm.relations, pm.idempotents);
    if (!report.not_applicable.empty()) {
        return report;
    }
    const Domain& domain = pm.relations;
    const std::size_t n = domain.size();
    const std::size_t M = domain.dimension();
    const auto gens = generator_positions(domain);
    auto ix = [](std::size_t i) { return static_cast<Eigen::Index>(i); };

    if (krein.extent() != n || inter.extent() != n) {
        throw std::invalid_argument("verify_leonard_pair: tensor extent differs from the module");
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& p = pm.adjacency_on_relation_basis[j](ix(k), ix(i));
                if (p != inter(j, i, k)) {
                    report.tensor_mismatches.push_back({"p", {domain.at(j), domain.at(i), domain.at(k)}, inter(j, i, k), p});
                }
                const Rational& q = pm.dual_adjacency_on_idempotent_basis[j](ix(k), ix(i));
                if (q != krein(j, i, k)) {
                    report.tensor_mismatches.push_back({"q", {domain.at(j), domain.at(i), domain.at(k)}, krein(j, i, k), q});
                }
            }
        }
    }

    const auto& H_star_basis = pm.adjacency_on_idempotent_basis;
    const auto& Ht_star_basis = pm.dual_adjacency_on_idempotent_basis;
    const auto& H_basis = pm.adjacency_on_relation_basis;
    const auto& Ht_basis = pm.dual_adjacency_on_relation_basis;
    const auto h_collisions = eigenvalue_collisions(domain, gens, H_star_basis);
    const auto ht_collisions = eigenvalue_collisions(domain, gens, Ht_basis);

    LeonardCondition c1{"i", true, {}};
    check_commuting_span(c1, "A", domain, gens, H_star_basis);
    LeonardCondition c2{"ii", true, {}};
    check_commuting_span(c2, "A*", domain, gens, Ht_basis);

    LeonardCondition c3{"iii", true, {}};
    fail_with(c3, h_collisions);
    check_adjacent_support(c3, "A*", domain, gens, Ht_star_basis);
    LeonardCondition c4{"iv", true, {}};
    fail_with(c4, ht_collisions);
    check_adjacent_support(c4, "A", domain, gens, H_basis);

    // Each E_a lies in the algebra generated by H once the joint eigenvalues
    // separate the indices, so an invariant subspace contains some v*_a.
    LeonardCondition c5{"v", true, {}};
    fail_with(c5, h_collisions);
    for (std::size_t start = 0; start < n; ++start) {
        std::vector<bool> reached(n, false);
        reached[start] = true;
        std::deque<std::size_t> frontier{start};
        while (!frontier.empty()) {
            const std::size_t a = frontier.front();
            frontier.pop_front();
            for (std::size_t i = 0; i < M; ++i) {
                for (int sign : {1, -1}) {
                    const MultiIndex step = sign > 0 ? domain.at(a) + MultiIndex::unit(M, i)
                                                     : domain.at(a) - MultiIndex::unit(M, i);
                    const auto b = domain.position(step);
                    if (!b || reached[*b] || Ht_star_basis[gens[i]](ix(*b), ix(a)).is_zero()) {
                        continue;
                    }
                    reached[*b] = true;
                    frontier.push_back(*b);
                }
            }
        }
        for (std::size_t b = 0; b < n; ++b) {
            if (!reached[b]) {
                c5.passed = false;
                c5.witnesses.push_back("from " + domain.at(start).str() + " unreached " + domain.at(b).str());
            }
        }
    }

    LeonardCondition c6{"vi", true, {}};
    fail_with(c6, h_collisions);
    fail_with(c6, ht_collisions);
    {
        const auto rows = pm.idempotent_vectors.empty() ? 0 : pm.idempotent_vectors.front().size();
        const RationalMatrix star = as_columns(pm.idempotent_vectors, rows);
        const RationalMatrix plain = as_columns(pm.relation_vectors, rows);
        RationalMatrix both(rows, star.cols() + plain.cols());
        both << star, plain;
        const auto expected = static_cast<Eigen::Index>(n);
        for (auto [name, r] : {std::pair{"v*", exact_rank(star)}, {"v", exact_rank(plain)}, {"v* and v", exact_rank(both)}}) {
            if (r != expected) {
                c6.passed = false;
                c6.witnesses.push_back(std::string("span of ") + name + " has dimension " + std::to_string(r)
                                       + ", expected " + std::to_string(expected));
            }
        }
    }

    LeonardCondition c7{"vii", true, {}};
    for (auto [name, family] : {std::pair{"v*", &pm.idempotent_vectors}, {"v", &pm.relation_vectors}}) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a; b < n; ++b) {
                const Rational g = dot((*family)[a], (*family)[b]);
                if ((a == b) == g.is_zero()) {
                    c7.passed = false;
                    c7.witnesses.push_back(std::string("<") + name + "_" + domain.at(a).str() + "," + name + "_"
                                           + domain.at(b).str() + "> = " + g.str());
                }
            }
        }
    }

    report.conditions = {c1, c2, c3, c4, c5, c6, c7};
    return report;
}

} // namespace atlas
