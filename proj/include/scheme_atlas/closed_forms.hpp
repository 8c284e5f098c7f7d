#pragma once

#include <string>
#include <vector>

#include "scheme_atlas/families.hpp"
#include "scheme_atlas/matrix.hpp"
#include "scheme_atlas/multi_index.hpp"
#include "scheme_atlas/polynomiality.hpp"

namespace atlas {

// Closed-form Krein numbers q^s_{1,i} of the classical families, written in
// the shifted parameters under which they appear inside the bivariate
// families. All return 0 when i or s lies outside the class range.

/// Scheme H(k-y, r-1).
[[nodiscard]] Rational hamming_closed_krein(int k, int y, int r, int i, int s);

/// Diagonal value q^j_{1j} of J(n-i, k-i).
[[nodiscard]] Rational johnson_diagonal_krein(int n, int k, int i, int j);
/// Scheme J(n-i, k-i).
[[nodiscard]] Rational johnson_closed_krein(int n, int k, int i, int j, int s);

/// Scheme H_q(m-y, l).
[[nodiscard]] Rational bilinear_closed_krein(int m, int y, int l, int q, int i, int s);

/// Sub-expressions of the Gr_q(n-i, m-i) Krein numbers. They satisfy
/// A + B + C = [n-m][m-i]/[n-i].
[[nodiscard]] Rational grassmann_lowering_part(int n, int m, int q, int i, int j);  // B
[[nodiscard]] Rational grassmann_raising_part(int n, int m, int q, int i, int j);   // C
[[nodiscard]] Rational grassmann_diagonal_part(int n, int m, int q, int i, int j);  // A
/// Scheme Gr_q(n-i, m-i).
[[nodiscard]] Rational grassmann_closed_krein(int n, int m, int q, int i, int j, int t);

/// Candidate targets `to` with possibly nonzero q^{to}_{direction, from}
/// (not yet intersected with the domain). direction is (1,0) or (0,1).
[[nodiscard]] std::vector<MultiIndex> nonbinary_johnson_krein_support(const MultiIndex& direction,
                                                                      const MultiIndex& from);
[[nodiscard]] std::vector<MultiIndex> attenuated_krein_support(const MultiIndex& direction, const MultiIndex& from);

/// q^{to}_{direction, from} of J_r(n,k). Throws std::out_of_range when
/// `from` or `to` is outside the domain, std::invalid_argument for a bad
/// direction.
[[nodiscard]] Rational nonbinary_johnson_closed_krein(int r, int n, int k, const MultiIndex& direction,
                                                      const MultiIndex& from, const MultiIndex& to);

/// q^{to}_{direction, from} of the attenuated-space scheme, same contract.
[[nodiscard]] Rational attenuated_closed_krein(int n, int m, int l, int q, const MultiIndex& direction,
                                               const MultiIndex& from, const MultiIndex& to);

struct ClosedFormEntry {
    MultiIndex direction;
    MultiIndex from;
    MultiIndex to;
    Rational closed_form;
    Rational spectral;

    [[nodiscard]] std::string str() const;
};

struct ClosedFormReport {
    FamilyParams params;
    Reduction reduction = Reduction::none;
    std::size_t entries_checked = 0;
    /// Closed form differs from the spectral sum.
    std::vector<ClosedFormEntry> value_mismatches;
    /// Spectral value nonzero at a target outside the listed support.
    std::vector<ClosedFormEntry> support_violations;
    /// Closed form could not be evaluated (nonzero over zero).
    std::vector<std::string> evaluation_errors;
    /// Krein criterion under grlex.
    PolynomialityReport q_polynomial;

    [[nodiscard]] bool passed() const
    {
        return value_mismatches.empty() && support_violations.empty() && evaluation_errors.empty()
            && q_polynomial.verdict();
    }
};

/// Compares every closed-form Krein number of the degree-one generators with
/// the spectral sums of make_table(params).
[[nodiscard]] ClosedFormReport verify_closed_forms(const FamilyParams& params);

/// Same, against a caller-supplied table and Krein tensor.
[[nodiscard]] ClosedFormReport verify_closed_forms(const FamilyParams& params, const SpectralTable& table,
                                                   const KreinTensor& krein);

} // namespace atlas
