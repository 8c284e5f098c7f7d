#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scheme_atlas/finite_field.hpp"
#include "scheme_atlas/matrix.hpp"
#include "scheme_atlas/multi_index.hpp"
#include "scheme_atlas/spectral.hpp"

namespace atlas {

/// Axiom or identity failure found while building an oracle object.
class OracleError : public std::runtime_error {
public:
    OracleError(std::string axiom, std::string witness);
    [[nodiscard]] const std::string& axiom() const { return axiom_; }
    [[nodiscard]] const std::string& witness() const { return witness_; }

private:
    std::string axiom_;
    std::string witness_;
};

/// Raised before enumerating more points than oracle_point_limit() allows.
class SizeGuardError : public std::runtime_error {
public:
    SizeGuardError(const Integer& requested, std::size_t limit);
};

/// SCHEME_ATLAS_MAX_POINTS when set to a positive integer, else 2000.
[[nodiscard]] std::size_t oracle_point_limit();
/// Throws SizeGuardError when `points` exceeds the limit.
void enforce_point_limit(const Integer& points);

/// Word over {0,...,r-1}.
struct WeightedVector {
    std::vector<int> entries;

    /// Number of nonzero entries.
    [[nodiscard]] int weight() const;
    friend bool operator==(const WeightedVector&, const WeightedVector&) = default;
};

/// All words of length n and weight k over r letters: supports in
/// lexicographic order, then values in odometer order.
[[nodiscard]] std::vector<WeightedVector> enumerate_nbj_points(int r, int n, int k);

/// (c - e, k - c) where c counts common support positions and e counts equal
/// nonzero entries. Throws std::invalid_argument unless both weights are k.
[[nodiscard]] MultiIndex nbj_relation(const WeightedVector& x, const WeightedVector& y, int k);

/// Span of the last l coordinates of F_q^{n+l}.
[[nodiscard]] Subspace attenuated_complement(const FiniteField& field, int n, int l);

/// m-dimensional subspaces of F_q^{n+l} meeting the complement trivially,
/// as rows [A | B] with A an m x n echelon form and B arbitrary.
[[nodiscard]] std::vector<Subspace> enumerate_attenuated_points(const FiniteField& field, int n, int m, int l);
/// Builds GF(q); throws std::invalid_argument when q is unsupported.
[[nodiscard]] std::vector<Subspace> enumerate_attenuated_points(int n, int m, int l, int q);

/// (a, g) for the pair (v, other) = (V, V'), where
/// g = m - (dim((V+W) ∩ (V'+W)) - dim W) and a = (m - g) - dim(V ∩ V').
/// a is the bilinear-forms part, g the Grassmann part. Throws
/// std::invalid_argument for inputs that are not m-dimensional and
/// complementary to W.
[[nodiscard]] MultiIndex attenuated_relation(const FiniteField& field, const Subspace& v, const Subspace& other,
                                             const Subspace& complement, int m);

/// A scheme held as its relation map and 0/1 adjacency matrices.
class ConcreteScheme {
public:
    [[nodiscard]] std::size_t num_points() const { return labels_.rows(); }
    /// Image of the relation map, grlex ordered.
    [[nodiscard]] const Domain& classes() const { return classes_; }
    /// Class position of (x, y).
    [[nodiscard]] std::size_t relation(std::size_t x, std::size_t y) const
    {
        return static_cast<std::size_t>(labels_(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)));
    }
    [[nodiscard]] const IntMatrix& adjacency(std::size_t cls) const { return adjacency_.at(cls); }
    /// (a, b, c) holds p^c_{ab}, counted from triples.
    [[nodiscard]] const IntersectionTensor& intersection_numbers() const { return intersection_; }
    /// Row sums of the adjacency matrices.
    [[nodiscard]] std::vector<long> valencies() const;

    /// Header "family params |X| classes", then one line per point with the
    /// labels "i,j" of its row separated by spaces.
    [[nodiscard]] std::string dump(std::string_view family, std::string_view params) const;

private:
    friend ConcreteScheme build_concrete_scheme(std::size_t num_points,
                                                const std::function<MultiIndex(std::size_t, std::size_t)>& relation);

    Domain classes_;
    Matrix<int> labels_;
    std::vector<IntMatrix> adjacency_;
    IntersectionTensor intersection_;
};

/// Builds the adjacency matrices and checks the axioms: partition of X x X,
/// identity relation at the zero label, closure under transposition,
/// products in the span with constant triple counts, commutativity,
/// symmetry. Throws OracleError naming the axiom and a witness.
[[nodiscard]] ConcreteScheme build_concrete_scheme(std::size_t num_points,
                                                   const std::function<MultiIndex(std::size_t, std::size_t)>& relation);

template <typename Point, typename Relation>
[[nodiscard]] ConcreteScheme build_concrete_scheme(const std::vector<Point>& points, Relation&& relation)
{
    enforce_point_limit(Integer(static_cast<unsigned long>(points.size())));
    return build_concrete_scheme(points.size(), [&](std::size_t x, std::size_t y) {
        return relation(points[x], points[y]);
    });
}

[[nodiscard]] ConcreteScheme build_nonbinary_johnson_scheme(int r, int n, int k);
[[nodiscard]] ConcreteScheme build_attenuated_scheme(int n, int m, int l, int q);

/// A M for a 0/1 matrix A, summing rows of M.
[[nodiscard]] RationalMatrix adjacency_times(const IntMatrix& A, const RationalMatrix& M);

/// E_b = (1/|X|) sum_a Q_b(a) A_a with the identities it must satisfy.
struct IdempotentSet {
    std::vector<RationalMatrix> matrices;
    /// Failed identities; check ids are "E^2=E", "E_bE_c=0", "sum E=I",
    /// "AE=PE", "trace E=m", "E_0=J/|X|".
    std::vector<Discrepancy> failures;

    [[nodiscard]] bool verified() const { return failures.empty(); }
};

/// Requires s.classes() == t.relations() and |X| agreement; throws
/// std::invalid_argument otherwise.
[[nodiscard]] IdempotentSet build_idempotents(const ConcreteScheme& s, const SpectralTable& t);

/// Krein numbers read from the entrywise products |X|E_a ∘ |X|E_b: the
/// product is expanded in the adjacency basis from one representative entry
/// per class, then moved to the idempotent basis with P. Throws OracleError
/// when the idempotents failed verification or a product is not constant on
/// a class.
[[nodiscard]] KreinTensor krein_by_hadamard(const ConcreteScheme& s, const SpectralTable& t,
                                            const IdempotentSet& idempotents);

} // namespace atlas
