#pragma once

#include <string>
#include <vector>

#include "scheme_atlas/matrix.hpp"
#include "scheme_atlas/multi_index.hpp"
#include "scheme_atlas/rational.hpp"

namespace atlas {

/// Marks tables built at a boundary parameter where the family degenerates
/// into a smaller classical one.
enum class Reduction { none, johnson, hamming, bilinear };

[[nodiscard]] std::string to_string(Reduction reduction);

/// Eigenmatrices and parameters of a symmetric scheme.
///
/// P(a, b) = P_a(b) with a over relations and b over idempotents.
/// Q(b, a) = Q_b(a). The zero index of each domain is the trivial relation
/// (resp. the idempotent J/|X|).
class SpectralTable {
public:
    /// Validates shapes, trivial row/column normalization, that the supplied
    /// valencies and multiplicities are positive integers matching the
    /// trivial column of P (resp. Q), and the symmetric-scheme relation
    /// P_a(b)/k_a = Q_b(a)/m_b. Throws std::invalid_argument naming the
    /// first failure.
    SpectralTable(std::string label, Integer size, Domain relations, Domain idempotents, RationalMatrix P,
                  RationalMatrix Q, RationalVector valencies, RationalVector multiplicities,
                  Reduction reduction = Reduction::none);

    [[nodiscard]] const std::string& label() const { return label_; }
    [[nodiscard]] const Integer& size() const { return size_; }
    [[nodiscard]] const Domain& relations() const { return relations_; }
    [[nodiscard]] const Domain& idempotents() const { return idempotents_; }
    [[nodiscard]] const RationalMatrix& P() const { return P_; }
    [[nodiscard]] const RationalMatrix& Q() const { return Q_; }
    [[nodiscard]] const RationalVector& valencies() const { return valencies_; }
    [[nodiscard]] const RationalVector& multiplicities() const { return multiplicities_; }
    [[nodiscard]] Reduction reduction() const { return reduction_; }

    [[nodiscard]] std::size_t trivial_relation() const { return trivial_relation_; }
    [[nodiscard]] std::size_t trivial_idempotent() const { return trivial_idempotent_; }

private:
    std::string label_;
    Integer size_;
    Domain relations_;
    Domain idempotents_;
    RationalMatrix P_;
    RationalMatrix Q_;
    RationalVector valencies_;
    RationalVector multiplicities_;
    Reduction reduction_ = Reduction::none;
    std::size_t trivial_relation_ = 0;
    std::size_t trivial_idempotent_ = 0;
};

/// One failed exact comparison.
struct Discrepancy {
    std::string check;
    std::vector<MultiIndex> indices;
    Rational expected;
    Rational got;

    [[nodiscard]] std::string str() const;
};

/// q^c_{ab} = (1/(|X| m_c)) sum_l k_l Q_a(l) Q_b(l) Q_c(l).
/// Throws std::out_of_range for indices outside the idempotent domain.
[[nodiscard]] Rational krein_from_spectral(const SpectralTable& t, const MultiIndex& a, const MultiIndex& b,
                                           const MultiIndex& c);

/// p^c_{ab} = (1/(|X| k_c)) sum_l m_l P_a(l) P_b(l) P_c(l).
[[nodiscard]] Rational intersection_from_spectral(const SpectralTable& t, const MultiIndex& a, const MultiIndex& b,
                                                  const MultiIndex& c);

/// Whole tensors, positions following the domain order.
[[nodiscard]] KreinTensor krein_tensor(const SpectralTable& t);
[[nodiscard]] IntersectionTensor intersection_tensor(const SpectralTable& t);

/// sum_l k_l Q_a(l) Q_b(l) - |X| m_a delta_ab.
[[nodiscard]] Rational orthogonality_residual(const SpectralTable& t, const MultiIndex& a, const MultiIndex& b);

/// P Q = |X| I, sum k = sum m = |X|, every orthogonality residual zero.
[[nodiscard]] std::vector<Discrepancy> table_invariant_failures(const SpectralTable& t);

/// sum_c q^c_{ab} m_c = m_a m_b, sum_b q^c_{ab} = m_a, q^c_{ab} = q^c_{ba},
/// q^c_{ab} >= 0.
[[nodiscard]] std::vector<Discrepancy> krein_rule_failures(const SpectralTable& t, const KreinTensor& krein);

/// sum_c p^c_{ab} k_c = k_a k_b, sum_b p^c_{ab} = k_a, p^c_{ab} = p^c_{ba},
/// p^c_{ab} >= 0.
[[nodiscard]] std::vector<Discrepancy> intersection_rule_failures(const SpectralTable& t,
                                                                  const IntersectionTensor& inter);

} // namespace atlas
