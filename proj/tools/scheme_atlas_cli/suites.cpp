#include "scheme_atlas_cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>

#include "scheme_atlas/closed_forms.hpp"
#include "scheme_atlas/leonard.hpp"
#include "scheme_atlas/oracle.hpp"
#include "scheme_atlas/orthopoly.hpp"
#include "scheme_atlas/polynomiality.hpp"
#include "scheme_atlas/qarith.hpp"

namespace atlas::cli {

std::string_view to_string(Suite suite)
{
    switch (suite) {
    case Suite::krein: return "krein";
    case Suite::qpoly: return "qpoly";
    case Suite::ppoly: return "ppoly";
    case Suite::oracle: return "oracle";
    case Suite::leonard: return "leonard";
    case Suite::recurrences: return "recurrences";
    case Suite::identities: return "identities";
    }
    return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name)
{
    for (Suite s : {Suite::krein, Suite::qpoly, Suite::ppoly, Suite::oracle, Suite::leonard, Suite::recurrences,
                    Suite::identities}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

bool suite_uses_family(Suite suite) { return suite != Suite::recurrences && suite != Suite::identities; }

std::vector<std::string> family_parameter_names(Family family)
{
    switch (family) {
    case Family::hamming: return {"n", "q"};
    case Family::johnson: return {"n", "k"};
    case Family::bilinear: return {"n", "l", "q"};
    case Family::grassmann: return {"n", "m", "q"};
    case Family::nonbinary_johnson: return {"r", "n", "k"};
    case Family::attenuated: return {"q", "n", "m", "l"};
    }
    return {};
}

namespace {

void require_names(const GridPoint& values, const std::set<std::string>& required, const std::set<std::string>& allowed,
                   const std::string& owner)
{
    for (const auto& [name, value] : values) {
        if (allowed.count(name) == 0) {
            throw UsageError("parameter '" + name + "' does not apply to " + owner);
        }
    }
    for (const auto& name : required) {
        if (lookup(values, name) == nullptr) {
            throw UsageError(owner + " needs parameter '" + name + "'");
        }
    }
}

int narrow(long value, const std::string& name)
{
    if (value < std::numeric_limits<int>::min() / 2 || value > std::numeric_limits<int>::max() / 2) {
        throw std::invalid_argument("parameter " + name + " out of range");
    }
    return static_cast<int>(value);
}

int get(const GridPoint& values, const std::string& name)
{
    const long* v = lookup(values, name);
    return v == nullptr ? 0 : narrow(*v, name);
}

std::string point_text(const GridPoint& values)
{
    std::string out;
    for (const auto& [name, value] : values) {
        out += (out.empty() ? "" : ",") + name + "=" + std::to_string(value);
    }
    return out;
}

} // namespace

FamilyParams family_params(Family family, const GridPoint& values)
{
    const auto names = family_parameter_names(family);
    const std::set<std::string> set(names.begin(), names.end());
    require_names(values, set, set, std::string(to_string(family)));
    FamilyParams p;
    p.family = family;
    p.n = get(values, "n");
    p.k = get(values, "k");
    p.q = get(values, "q");
    p.r = get(values, "r");
    p.m = get(values, "m");
    p.l = get(values, "l");
    return p;
}

void check_point_names(Suite suite, std::optional<Family> family, const GridPoint& names)
{
    if (suite_uses_family(suite)) {
        if (!family) {
            throw UsageError("suite " + std::string(to_string(suite)) + " needs --family");
        }
        if ((suite == Suite::oracle || suite == Suite::leonard) && *family != Family::nonbinary_johnson
            && *family != Family::attenuated) {
            throw UsageError("suite " + std::string(to_string(suite))
                             + " builds concrete schemes for nonbinary_johnson and attenuated only");
        }
        (void)family_params(*family, names);
        return;
    }
    if (family) {
        throw UsageError("suite " + std::string(to_string(suite)) + " takes no --family");
    }
    if (suite == Suite::recurrences) {
        require_names(names, {"N"}, {"N", "q"}, "recurrences");
    } else {
        require_names(names, {"N", "q"}, {"N", "q"}, "identities");
    }
}

std::vector<GridPoint> default_points(Suite suite)
{
    std::vector<GridPoint> out;
    if (suite == Suite::recurrences) {
        for (long N = 1; N <= 10; ++N) {
            out.push_back({{"N", N}});
        }
        for (long N = 1; N <= 8; ++N) {
            for (long q = 2; q <= 3; ++q) {
                out.push_back({{"N", N}, {"q", q}});
            }
        }
    } else if (suite == Suite::identities) {
        for (long q = 2; q <= 4; ++q) {
            for (long N = 1; N <= 12; ++N) {
                out.push_back({{"q", q}, {"N", N}});
            }
        }
    }
    return out;
}

namespace {

std::string num(const char* name, long v) { return std::string(name) + "=" + std::to_string(v); }

std::vector<std::string> texts(const std::vector<MultiIndex>& indices)
{
    std::vector<std::string> out;
    for (const auto& i : indices) {
        out.push_back(i.str());
    }
    return out;
}

void record_discrepancies(Recorder& rec, const std::string& check, const std::vector<Discrepancy>& found)
{
    if (found.empty()) {
        rec.expect(check, {}, true);
        return;
    }
    for (const auto& d : found) {
        rec.fail(check + ": " + d.check, texts(d.indices), d.expected, d.got);
    }
}

void compare_tensors(Recorder& rec, const std::string& check, const Domain& domain, const Tensor3<Rational>& expected,
                     const Tensor3<Rational>& got)
{
    const std::size_t n = domain.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                rec.compare(check, {domain.at(a).str(), domain.at(b).str(), domain.at(c).str()}, expected(a, b, c),
                            got(a, b, c));
            }
        }
    }
}

std::vector<MonomialOrder> candidate_orders(const std::string& choice, bool krein_side, std::size_t dim)
{
    if (choice == "lex") {
        return {MonomialOrder::lex()};
    }
    if (choice == "grlex") {
        return {MonomialOrder::grlex()};
    }
    if (choice == "grlex-reversed") {
        return {MonomialOrder::grlex_reversed(dim)};
    }
    if (choice == "any" || (choice == "auto" && !krein_side)) {
        return all_orders(dim);
    }
    if (choice == "auto") {
        return {MonomialOrder::grlex()};
    }
    throw UsageError("unknown order '" + choice + "'");
}

void record_polynomiality(Recorder& rec, const std::string& check, const PolynomialityReport& report)
{
    rec.expect(check + " downward_closed", {}, report.downward_closed);
    for (const auto& v : report.violations) {
        rec.fail(check, {v.generator.str(), v.from.str(), v.to.str()}, std::nullopt, v.value,
                 v.str() + " under " + report.order.str());
    }
    if (report.violations.empty()) {
        rec.expect(check, {}, true, "order " + report.order.str());
    }
}

template <typename Check>
void search_orders(Recorder& rec, const std::string& check, const std::vector<MonomialOrder>& orders, Check&& run)
{
    std::optional<PolynomialityReport> first;
    for (const auto& order : orders) {
        PolynomialityReport report = run(order);
        if (report.verdict()) {
            record_polynomiality(rec, check, report);
            return;
        }
        if (!first) {
            first = std::move(report);
        }
    }
    if (orders.size() > 1) {
        rec.fail(check + " order search", {}, std::nullopt, std::nullopt,
                 "no order among " + std::to_string(orders.size()) + " candidates works; witnesses are for "
                     + first->order.str());
    }
    record_polynomiality(rec, check, *first);
}

ConcreteScheme build_scheme(const FamilyParams& p)
{
    if (p.family == Family::nonbinary_johnson) {
        return build_nonbinary_johnson_scheme(p.r, p.n, p.k);
    }
    return build_attenuated_scheme(p.n, p.m, p.l, p.q);
}

void run_krein(Recorder& rec, const FamilyParams& params)
{
    const SpectralTable t = make_table(params);
    const KreinTensor krein = krein_tensor(t);
    const IntersectionTensor inter = intersection_tensor(t);
    record_discrepancies(rec, "table_invariants", table_invariant_failures(t));
    record_discrepancies(rec, "krein_rules", krein_rule_failures(t, krein));
    record_discrepancies(rec, "intersection_rules", intersection_rule_failures(t, inter));

    const ClosedFormReport cf = verify_closed_forms(params, t, krein);
    rec.pass_count("closed_form", cf.entries_checked - cf.value_mismatches.size());
    for (const auto& e : cf.value_mismatches) {
        rec.fail("closed_form", {e.direction.str(), e.from.str(), e.to.str()}, e.spectral, e.closed_form);
    }
    for (const auto& e : cf.support_violations) {
        rec.fail("support", {e.direction.str(), e.from.str(), e.to.str()}, Rational(0), e.spectral);
    }
    if (cf.support_violations.empty()) {
        rec.expect("support", {}, true);
    }
    for (const auto& what : cf.evaluation_errors) {
        rec.fail("closed_form evaluation", {}, std::nullopt, std::nullopt, what);
    }
    record_polynomiality(rec, "q_polynomial", cf.q_polynomial);
}

void run_oracle(Recorder& rec, const FamilyParams& params)
{
    const SpectralTable t = make_table(params);
    ConcreteScheme s;
    try {
        s = build_scheme(params);
    } catch (const OracleError& e) {
        rec.fail("axiom " + e.axiom(), {}, std::nullopt, std::nullopt, e.witness());
        return;
    }
    rec.expect("axioms", {}, true, "A1-A6");
    if (!(s.classes() == t.relations())) {
        rec.fail("classes", {}, Rational(static_cast<long>(t.relations().size())),
                 Rational(static_cast<long>(s.classes().size())), "relation labels differ from the table domain");
        return;
    }
    rec.expect("classes", {}, true);
    compare_tensors(rec, "intersection_numbers", t.relations(), intersection_tensor(t), s.intersection_numbers());
    const auto valencies = s.valencies();
    for (std::size_t a = 0; a < valencies.size(); ++a) {
        rec.compare("valency", {t.relations().at(a).str()}, t.valencies()(static_cast<Eigen::Index>(a)),
                    Rational(valencies[a]));
    }
    const IdempotentSet idem = build_idempotents(s, t);
    record_discrepancies(rec, "idempotent_identities", idem.failures);
    if (!idem.verified()) {
        return;
    }
    try {
        compare_tensors(rec, "hadamard_krein", t.idempotents(), krein_tensor(t), krein_by_hadamard(s, t, idem));
    } catch (const OracleError& e) {
        rec.fail("hadamard_krein " + e.axiom(), {}, std::nullopt, std::nullopt, e.witness());
    }
}

std::string joined(const std::vector<std::string>& parts, std::size_t limit)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size() && i < limit; ++i) {
        out += (i > 0 ? "; " : "") + parts[i];
    }
    if (parts.size() > limit) {
        out += "; ... " + std::to_string(parts.size() - limit) + " more";
    }
    return out;
}

void run_leonard(Recorder& rec, const FamilyParams& params, const SuiteOptions& options)
{
    const SpectralTable t = make_table(params);
    const KreinTensor krein = krein_tensor(t);
    const IntersectionTensor inter = intersection_tensor(t);
    const auto orders = all_orders(t.relations().dimension());
    const AMPropertyReport am = check_AM_property(t, inter, krein, orders);
    if (!am.applicable()) {
        throw NotApplicable(am.not_applicable);
    }
    rec.expect("am_p_polynomial", {}, am.p_order.has_value(), am.p_order ? "order " + am.p_order->str() : "no order");
    rec.expect("am_q_polynomial", {}, am.q_order.has_value(), am.q_order ? "order " + am.q_order->str() : "no order");
    for (const auto& v : am.violations) {
        rec.fail("am_adjacency", {std::string(1, v.side), v.generator.str(), v.from.str(), v.to.str()}, Rational(0),
                 v.value, v.str());
    }
    if (am.violations.empty()) {
        rec.expect("am_adjacency", {}, true);
    }

    ConcreteScheme s;
    try {
        s = build_scheme(params);
    } catch (const OracleError& e) {
        rec.fail("axiom " + e.axiom(), {}, std::nullopt, std::nullopt, e.witness());
        return;
    }
    const IdempotentSet idem = build_idempotents(s, t);
    record_discrepancies(rec, "idempotent_identities", idem.failures);

    std::vector<std::size_t> bases;
    if (options.all_base_points) {
        for (std::size_t x = 0; x < s.num_points(); ++x) {
            bases.push_back(x);
        }
    } else {
        if (options.base_point >= s.num_points()) {
            throw UsageError("base point " + std::to_string(options.base_point) + " is not below |X| = "
                             + std::to_string(s.num_points()));
        }
        bases.push_back(options.base_point);
    }
    for (std::size_t x0 : bases) {
        const std::string where = "x0=" + std::to_string(x0);
        const PrincipalModule pm = build_principal_module(s, t, idem, x0);
        for (const auto& f : pm.failures) {
            auto indices = texts(f.indices);
            indices.insert(indices.begin(), where);
            rec.fail("module " + f.check, std::move(indices), f.expected, f.got);
        }
        if (pm.verified()) {
            rec.expect("module T1-T6", {where}, true);
        }
        const LeonardReport lp = verify_leonard_pair(pm, krein, inter);
        for (const auto& c : lp.conditions) {
            rec.expect("condition (" + c.id + ")", {where}, c.passed, joined(c.witnesses, 5));
        }
        for (const auto& m : lp.tensor_mismatches) {
            auto indices = texts(m.indices);
            indices.insert(indices.begin(), where);
            rec.fail("module vs tensor " + m.check, std::move(indices), m.expected, m.got);
        }
        rec.expect("am_property iff leonard_pair", {where}, am.verdict() == lp.passed());
    }
}

void run_recurrences(Recorder& rec, const GridPoint& point)
{
    const int N = get(point, "N");
    const long* q = lookup(point, "q");
    if (q != nullptr && *q < 2) {
        throw std::invalid_argument("q must be at least 2");
    }
    for (int p = 1; p < N; ++p) {
        for (int r = 0; r <= std::min(p, N - p); ++r) {
            for (int x = 0; x <= std::min(p - 1, N - p); ++x) {
                std::vector<std::string> where{num("N", N), num("p", p), num("r", r), num("x", x)};
                if (q == nullptr) {
                    rec.compare("hahn_recurrence", std::move(where), Rational(0), hahn_recurrence_residual(N, p, r, x));
                } else {
                    where.push_back(num("q", *q));
                    rec.compare("q_hahn_recurrence", std::move(where), Rational(0),
                                q_hahn_recurrence_residual(N, p, static_cast<int>(*q), r, x));
                }
            }
        }
    }
    const int n = N;
    for (int k = 1; k < n; ++k) {
        for (int i = 0; i < k; ++i) {
            if (q == nullptr && n - i < 2) {
                continue;
            }
            for (int y = 0; y <= std::min(k - i, n - k); ++y) {
                std::vector<std::string> where{num("n", n), num(q == nullptr ? "k" : "m", k), num("i", i), num("y", y)};
                if (q == nullptr) {
                    rec.compare("hahn_shift", std::move(where), Rational(0), hahn_degree_one_shift_residual(n, k, i, y));
                } else {
                    where.push_back(num("q", *q));
                    rec.compare("q_hahn_shift", std::move(where), Rational(0),
                                q_hahn_degree_one_shift_residual(n, k, static_cast<int>(*q), i, y));
                }
            }
        }
    }
}

void run_identities(Recorder& rec, const GridPoint& point)
{
    const long N = get(point, "N");
    const long q = get(point, "q");
    if (q < 2) {
        throw std::invalid_argument("q must be at least 2");
    }
    for (long b = 1; b < N; ++b) {
        rec.compare("difference", {num("a", N), num("b", b), num("q", q)}, Rational(0),
                    q_identity_residual(QIdentity::difference, N, b, q));
    }
    for (QIdentity id : {QIdentity::lower_step, QIdentity::absorb_both, QIdentity::absorb_top, QIdentity::adjacent_gap}) {
        const long top = id == QIdentity::absorb_top ? N - 1 : N;
        for (long r = 1; r <= top; ++r) {
            rec.compare(std::string(to_string(id)), {num("N", N), num("r", r), num("q", q)}, Rational(0),
                        q_identity_residual(id, N, r, q));
        }
    }
}

} // namespace

PointReport run_point(Suite suite, std::optional<Family> family, const GridPoint& point, const SuiteOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    PointReport out;
    out.params = point;
    Recorder rec(options.detail);

    if (suite_uses_family(suite)) {
        const FamilyParams params = family_params(*family, point);
        params.validate();
        out.label = params.str();
        if (suite == Suite::oracle || suite == Suite::leonard) {
            try {
                enforce_point_limit(point_count(params));
            } catch (const SizeGuardError& e) {
                out.error = e.what();
                out.size_guard = true;
                return out;
            }
        }
        switch (suite) {
        case Suite::krein: run_krein(rec, params); break;
        case Suite::qpoly: {
            const SpectralTable t = make_table(params);
            const KreinTensor krein = krein_tensor(t);
            search_orders(rec, "q_polynomial", candidate_orders(options.order, true, t.idempotents().dimension()),
                          [&](const MonomialOrder& o) { return check_q_polynomial(t, t.idempotents(), o, krein); });
            break;
        }
        case Suite::ppoly: {
            const SpectralTable t = make_table(params);
            const IntersectionTensor inter = intersection_tensor(t);
            search_orders(rec, "p_polynomial", candidate_orders(options.order, false, t.relations().dimension()),
                          [&](const MonomialOrder& o) { return check_p_polynomial(t, t.relations(), o, inter); });
            break;
        }
        case Suite::oracle: run_oracle(rec, params); break;
        case Suite::leonard: run_leonard(rec, params, options); break;
        default: break;
        }
    } else if (suite == Suite::recurrences) {
        out.label = std::string(lookup(point, "q") ? "q_hahn(" : "hahn(") + point_text(point) + ")";
        run_recurrences(rec, point);
    } else {
        out.label = "q_identities(" + point_text(point) + ")";
        run_identities(rec, point);
    }
    out.checks = rec.take();
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

} // namespace atlas::cli
