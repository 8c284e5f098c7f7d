#pragma once

#include <string>
#include <vector>

#include "scheme_atlas/matrix.hpp"
#include "scheme_atlas/multi_index.hpp"
#include "scheme_atlas/spectral.hpp"

namespace atlas {

/// Structure constant c^{to}_{generator, from} that breaks the criterion.
struct PolynomialityViolation {
    enum class Kind {
        exceeds_bound,      ///< nonzero although to > from + generator
        vanishing_leading,  ///< zero although to = from + generator is in the domain
    };
    Kind kind;
    MultiIndex generator;
    MultiIndex from;
    MultiIndex to;
    Rational value;

    [[nodiscard]] std::string str() const;
};

struct PolynomialityReport {
    MonomialOrder order;
    bool downward_closed = false;
    /// Generators e_i absent from the domain. Such a scheme is checked in the
    /// variables it has; the verdict does not depend on this list.
    std::vector<MultiIndex> missing_generators;
    std::vector<PolynomialityViolation> violations;

    [[nodiscard]] bool verdict() const { return downward_closed && violations.empty(); }
};

/// Criterion on Krein numbers. `dual` must equal t.idempotents(); throws
/// std::invalid_argument otherwise.
[[nodiscard]] PolynomialityReport check_q_polynomial(const SpectralTable& t, const Domain& dual,
                                                     const MonomialOrder& order, const KreinTensor& krein);

/// Criterion on intersection numbers. `primal` must equal t.relations().
[[nodiscard]] PolynomialityReport check_p_polynomial(const SpectralTable& t, const Domain& primal,
                                                     const MonomialOrder& order, const IntersectionTensor& inter);

/// The shared criterion over any domain and structure tensor.
[[nodiscard]] PolynomialityReport check_polynomial_structure(const Domain& domain, const MonomialOrder& order,
                                                             const Tensor3<Rational>& constants);

} // namespace atlas
