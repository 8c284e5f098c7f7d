#include "scheme_atlas/polynomiality.hpp"

#include <stdexcept>

namespace atlas {

std::string PolynomialityViolation::str() const
{
    const char* what = kind == Kind::exceeds_bound ? "nonzero beyond bound" : "vanishing leading coefficient";
    return std::string(what) + ": c^" + to.str() + "_{" + generator.str() + "," + from.str() + "} = " + value.str();
}

PolynomialityReport check_polynomial_structure(const Domain& domain, const MonomialOrder& order,
                                               const Tensor3<Rational>& constants)
{
    if (constants.extent() != domain.size()) {
        throw std::invalid_argument("check_polynomial_structure: tensor extent differs from domain size");
    }
    PolynomialityReport report;
    report.order = order;
    report.downward_closed = is_downward_closed(domain);
    const std::size_t dim = domain.dimension();
    for (std::size_t axis = 0; axis < dim; ++axis) {
        const MultiIndex gen = MultiIndex::unit(dim, axis);
        const auto g = domain.position(gen);
        if (!g) {
            report.missing_generators.push_back(gen);
            continue;
        }
        for (std::size_t a = 0; a < domain.size(); ++a) {
            const MultiIndex& from = domain.at(a);
            const MultiIndex top = from + gen;
            for (std::size_t b = 0; b < domain.size(); ++b) {
                const Rational& value = constants(*g, a, b);
                if (!value.is_zero() && compare(order, domain.at(b), top) > 0) {
                    report.violations.push_back(
                        {PolynomialityViolation::Kind::exceeds_bound, gen, from, domain.at(b), value});
                }
            }
            if (const auto t = domain.position(top); t && constants(*g, a, *t).is_zero()) {
                report.violations.push_back({PolynomialityViolation::Kind::vanishing_leading, gen, from, top, Rational(0)});
            }
        }
    }
    return report;
}

PolynomialityReport check_q_polynomial(const SpectralTable& t, const Domain& dual, const MonomialOrder& order,
                                       const KreinTensor& krein)
{
    if (!(dual == t.idempotents())) {
        throw std::invalid_argument("check_q_polynomial: domain differs from the table's idempotent labels");
    }
    return check_polynomial_structure(dual, order, krein);
}

PolynomialityReport check_p_polynomial(const SpectralTable& t, const Domain& primal, const MonomialOrder& order,
                                       const IntersectionTensor& inter)
{
    if (!(primal == t.relations())) {
        throw std::invalid_argument("check_p_polynomial: domain differs from the table's relation labels");
    }
    return check_polynomial_structure(primal, order, inter);
}

} // namespace atlas
