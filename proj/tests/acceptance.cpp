// One PASS/FAIL line per acceptance criterion; exit status 0 only when all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "scheme_atlas/closed_forms.hpp"
#include "scheme_atlas/families.hpp"
#include "scheme_atlas/leonard.hpp"
#include "scheme_atlas/oracle.hpp"
#include "scheme_atlas/orthopoly.hpp"
#include "scheme_atlas/qarith.hpp"

namespace {

using namespace atlas;

struct Outcome {
    bool passed = true;
    std::size_t checks = 0;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok) {
            passed = false;
            if (notes.size() < 5) {
                notes.push_back(what);
            }
        }
    }
};

std::vector<FamilyParams> nbj_grid()
{
    std::vector<FamilyParams> grid;
    for (int r : {3, 4, 5, 7}) {
        for (int n = 3; n <= 8; ++n) {
            for (int k = 1; k < n; ++k) {
                grid.push_back(FamilyParams::nonbinary_johnson(r, n, k));
            }
        }
    }
    return grid;
}

std::vector<FamilyParams> attenuated_grid()
{
    std::vector<FamilyParams> grid;
    for (int q : {2, 3}) {
        for (int n = 1; n <= 5; ++n) {
            for (int m = 1; m <= n; ++m) {
                for (int l = 1; l <= 3; ++l) {
                    grid.push_back(FamilyParams::attenuated(n, m, l, q));
                }
            }
        }
    }
    return grid;
}

Outcome closed_forms_on(const std::vector<FamilyParams>& grid)
{
    Outcome out;
    for (const FamilyParams& p : grid) {
        const ClosedFormReport report = verify_closed_forms(p);
        out.checks += report.entries_checked;
        out.require(report.value_mismatches.empty(), p.str() + ": value mismatch");
        out.require(report.support_violations.empty(), p.str() + ": support violation");
        out.require(report.evaluation_errors.empty(), p.str() + ": evaluation error");
        out.require(report.q_polynomial.verdict(), p.str() + ": not Q-polynomial under grlex");
    }
    return out;
}

Outcome recurrences()
{
    Outcome out;
    for (int N = 2; N <= 10; ++N) {
        for (int p = 1; p < N; ++p) {
            for (int x = 0; x <= std::min(p - 1, N - p); ++x) {
                for (int r = 0; r <= std::min(p, N - p); ++r) {
                    out.require(hahn_recurrence_residual(N, p, r, x).is_zero(), "hahn recurrence");
                    if (N <= 8) {
                        for (int q : {2, 3}) {
                            out.require(q_hahn_recurrence_residual(N, p, q, r, x).is_zero(), "q-hahn recurrence");
                        }
                    }
                }
            }
        }
    }
    for (int n = 2; n <= 10; ++n) {
        for (int k = 1; k < n; ++k) {
            for (int i = 0; i < k && n - i >= 2; ++i) {
                for (int y = 0; y <= std::min(k - i, n - k); ++y) {
                    out.require(hahn_degree_one_shift_residual(n, k, i, y).is_zero(), "hahn shift");
                    if (n <= 8) {
                        for (int q : {2, 3}) {
                            out.require(q_hahn_degree_one_shift_residual(n, k, q, i, y).is_zero(), "q-hahn shift");
                        }
                    }
                }
            }
        }
    }
    return out;
}

Outcome identities()
{
    Outcome out;
    for (long q : {2, 3, 4}) {
        for (long a = 1; a <= 12; ++a) {
            for (long b = 1; b < a; ++b) {
                out.require(q_identity_residual(QIdentity::difference, a, b, q).is_zero(), "difference");
            }
        }
        for (long N = 1; N <= 12; ++N) {
            for (long r = 1; r <= N; ++r) {
                out.require(q_identity_residual(QIdentity::lower_step, N, r, q).is_zero(), "lower_step");
                out.require(q_identity_residual(QIdentity::absorb_both, N, r, q).is_zero(), "absorb_both");
                out.require(q_identity_residual(QIdentity::adjacent_gap, N, r, q).is_zero(), "adjacent_gap");
                if (r < N) {
                    out.require(q_identity_residual(QIdentity::absorb_top, N, r, q).is_zero(), "absorb_top");
                }
            }
        }
    }
    return out;
}

Outcome oracle_instances()
{
    Outcome out;
    std::vector<std::pair<FamilyParams, std::function<ConcreteScheme()>>> instances{
        {FamilyParams::nonbinary_johnson(3, 3, 2), [] { return build_nonbinary_johnson_scheme(3, 3, 2); }},
        {FamilyParams::nonbinary_johnson(3, 4, 2), [] { return build_nonbinary_johnson_scheme(3, 4, 2); }},
        {FamilyParams::nonbinary_johnson(4, 4, 2), [] { return build_nonbinary_johnson_scheme(4, 4, 2); }},
        {FamilyParams::attenuated(2, 1, 1, 2), [] { return build_attenuated_scheme(2, 1, 1, 2); }},
        {FamilyParams::attenuated(2, 1, 2, 2), [] { return build_attenuated_scheme(2, 1, 2, 2); }},
        {FamilyParams::attenuated(3, 2, 1, 2), [] { return build_attenuated_scheme(3, 2, 1, 2); }},
        {FamilyParams::attenuated(3, 1, 2, 2), [] { return build_attenuated_scheme(3, 1, 2, 2); }},
    };
    for (const auto& [params, build] : instances) {
        const std::string name = params.str();
        try {
            const SpectralTable t = make_table(params);
            const ConcreteScheme s = build();  // axioms checked while building
            out.require(Integer(static_cast<unsigned long>(s.num_points())) == t.size(), name + ": point count");
            out.require(s.classes() == t.relations(), name + ": relation image");
            out.require(s.intersection_numbers() == intersection_tensor(t), name + ": triple counts");
            const auto k = s.valencies();
            for (std::size_t a = 0; a < k.size(); ++a) {
                out.require(Rational(k[a]) == t.valencies()(static_cast<Eigen::Index>(a)), name + ": valency");
            }
            const IdempotentSet e = build_idempotents(s, t);
            for (const Discrepancy& d : e.failures) {
                out.require(false, name + ": " + d.str());
            }
            out.require(e.verified(), name + ": idempotents");
            if (e.verified()) {
                out.require(krein_by_hadamard(s, t, e) == krein_tensor(t), name + ": hadamard Krein");
            }
        } catch (const std::exception& ex) {
            out.require(false, name + ": " + ex.what());
        }
    }
    return out;
}

Outcome leonard_instances()
{
    Outcome out;
    const std::vector<std::pair<ConcreteScheme, SpectralTable>> instances{
        {build_nonbinary_johnson_scheme(3, 6, 2), nonbinary_johnson_table(3, 6, 2)},
        {build_attenuated_scheme(2, 1, 1, 2), attenuated_table(2, 1, 1, 2)},
    };
    for (const auto& [s, t] : instances) {
        const KreinTensor krein = krein_tensor(t);
        const IntersectionTensor inter = intersection_tensor(t);
        const AMPropertyReport am = check_AM_property(t, inter, krein, all_orders(t.relations().dimension()));
        out.require(am.verdict(), t.label() + ": AM property");
        const IdempotentSet e = build_idempotents(s, t);
        out.require(e.verified(), t.label() + ": idempotents");
        const PrincipalModule pm = build_principal_module(s, t, e, 0);
        out.require(pm.verified(), t.label() + ": principal module");
        const LeonardReport lp = verify_leonard_pair(pm, krein, inter);
        out.require(lp.conditions.size() == 7, t.label() + ": seven conditions");
        for (const LeonardCondition& c : lp.conditions) {
            out.require(c.passed, t.label() + ": condition " + c.id);
        }
        out.require(lp.passed(), t.label() + ": Leonard pair");
    }
    return out;
}

Outcome reductions()
{
    Outcome out;
    const std::vector<FamilyParams> instances{
        FamilyParams::nonbinary_johnson(2, 5, 2), FamilyParams::nonbinary_johnson(2, 6, 3),
        FamilyParams::nonbinary_johnson(2, 4, 1), FamilyParams::nonbinary_johnson(3, 3, 3),
        FamilyParams::nonbinary_johnson(4, 4, 4), FamilyParams::nonbinary_johnson(5, 2, 2),
        FamilyParams::attenuated(2, 2, 1, 2),     FamilyParams::attenuated(3, 3, 2, 2),
        FamilyParams::attenuated(2, 2, 3, 3),
    };
    for (const FamilyParams& p : instances) {
        for (const Discrepancy& d : reduction_mismatches(p)) {
            out.require(false, p.str() + ": " + d.str());
        }
        ++out.checks;
    }
    return out;
}

Outcome sum_rules()
{
    Outcome out;
    std::vector<FamilyParams> grid = nbj_grid();
    const auto att = attenuated_grid();
    grid.insert(grid.end(), att.begin(), att.end());
    for (const FamilyParams& p : grid) {
        const SpectralTable t = make_table(p);
        const std::string name = p.str();
        out.require(table_invariant_failures(t).empty(), name + ": orthogonality");
        out.require(krein_rule_failures(t, krein_tensor(t)).empty(), name + ": Krein rules");
        out.require(intersection_rule_failures(t, intersection_tensor(t)).empty(), name + ": intersection rules");
    }
    return out;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"nonbinary Johnson closed-form Krein numbers", [] { return closed_forms_on(nbj_grid()); }},
        {"attenuated closed-form Krein numbers", [] { return closed_forms_on(attenuated_grid()); }},
        {"Hahn and q-Hahn recurrences and shifts", recurrences},
        {"q-number identities", identities},
        {"combinatorial oracle ground truth", oracle_instances},
        {"AM property and Leonard pairs", leonard_instances},
        {"boundary reductions", reductions},
        {"orthogonality and sum rules", sum_rules},
    };
    bool all = true;
    int id = 0;
    for (const auto& [name, run] : criteria) {
        ++id;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception& e) {
            outcome.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && outcome.passed;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (outcome.passed ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " ("
                  << outcome.checks << " checks, " << timing << ")" << std::endl;
        for (const auto& note : outcome.notes) {
            std::cout << "    " << note << std::endl;
        }
    }
    return all ? 0 : 1;
}
