#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scheme_atlas/matrix.hpp"
#include "scheme_atlas/multi_index.hpp"
#include "scheme_atlas/oracle.hpp"
#include "scheme_atlas/spectral.hpp"

namespace atlas {

/// N when the domain is {alpha : |alpha| <= N}, otherwise empty.
[[nodiscard]] std::optional<int> is_simplex(const Domain& domain);

/// Whether alpha - beta is a permutation of 0, e_1 - e_2, e_1 or -e_1.
/// Throws std::invalid_argument on dimension mismatch.
[[nodiscard]] bool adjacent(const MultiIndex& alpha, const MultiIndex& beta);

/// Nonzero p^to_{e_i,from} or q^to_{e_i,from} with `to` not adjacent to `from`.
struct AdjacencyViolation {
    char side;  ///< 'P' or 'Q'
    MultiIndex generator;
    MultiIndex from;
    MultiIndex to;
    Rational value;

    [[nodiscard]] std::string str() const;
};

struct AMPropertyReport {
    /// Empty when both domains are one simplex with N >= 1.
    std::string not_applicable;
    int bound = 0;
    /// First order of the candidate list under which each criterion holds.
    std::optional<MonomialOrder> p_order;
    std::optional<MonomialOrder> q_order;
    std::vector<AdjacencyViolation> violations;

    [[nodiscard]] bool applicable() const { return not_applicable.empty(); }
    [[nodiscard]] bool verdict() const
    {
        return applicable() && p_order.has_value() && q_order.has_value() && violations.empty();
    }
};

/// Searches `orders` for P- and Q-polynomial structure and checks that every
/// generator's structure constants stay on adjacent indices.
[[nodiscard]] AMPropertyReport check_AM_property(const SpectralTable& t, const IntersectionTensor& inter,
                                                 const KreinTensor& krein, const std::vector<MonomialOrder>& orders);

/// The T-module generated by the characteristic vector of a base point.
///
/// v_a = E*_a 1 for relations a, v*_b = E_b x0 for idempotents b. The
/// operator matrices are coordinates of A_j w and A*_j w, recovered by
/// orthogonal projection and then checked by reconstruction.
struct PrincipalModule {
    std::size_t base_point = 0;
    Domain relations;
    Domain idempotents;
    std::vector<RationalVector> relation_vectors;
    std::vector<RationalVector> idempotent_vectors;

    /// Per relation j: A_j in the v* basis and in the v basis.
    std::vector<RationalMatrix> adjacency_on_idempotent_basis;
    std::vector<RationalMatrix> adjacency_on_relation_basis;
    /// Per idempotent j: A*_j in the v* basis and in the v basis.
    std::vector<RationalMatrix> dual_adjacency_on_idempotent_basis;
    std::vector<RationalMatrix> dual_adjacency_on_relation_basis;

    /// Failed T-facts. Check ids: "T1", "T2", "T3", "T4", "T5", "T6",
    /// "change of basis", "v*_0", "projection".
    std::vector<Discrepancy> failures;

    [[nodiscard]] bool verified() const { return failures.empty(); }
};

/// Throws std::out_of_range when x0 is not a point and std::invalid_argument
/// when the scheme and table are not aligned.
[[nodiscard]] PrincipalModule build_principal_module(const ConcreteScheme& s, const SpectralTable& t,
                                                     const IdempotentSet& idempotents, std::size_t x0);

struct LeonardCondition {
    std::string id;  ///< "i" .. "vii"
    bool passed = true;
    std::vector<std::string> witnesses;
};

struct LeonardReport {
    std::string not_applicable;
    std::vector<LeonardCondition> conditions;
    /// Module operator entries that disagree with the supplied tensors.
    std::vector<Discrepancy> tensor_mismatches;

    [[nodiscard]] bool passed() const;
};

/// Conditions (i)-(vii) for H = span A_{e_i} and H~ = span A*_{e_i} on the
/// module. Irreducibility is certified by reaching every index from every
/// start through nonzero coefficients of E_{a +- e_i} A*_{e_i} v*_a.
[[nodiscard]] LeonardReport verify_leonard_pair(const PrincipalModule& pm, const KreinTensor& krein,
                                                const IntersectionTensor& inter);

} // namespace atlas
