#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace atlas {

/// GF(q) for q in {2,3,4,5,7,8,9}. Elements are 0..q-1, read as base-p
/// coefficient vectors of polynomials modulo a fixed irreducible polynomial.
class FiniteField {
public:
    using Element = std::uint8_t;

    /// Throws std::invalid_argument for unsupported orders.
    explicit FiniteField(int order);

    /// Whether `order` is p^e with p prime, e >= 1.
    static bool is_prime_power(int order);
    static bool is_supported(int order);

    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] int characteristic() const { return characteristic_; }
    [[nodiscard]] int degree() const { return degree_; }

    [[nodiscard]] Element add(Element a, Element b) const { return add_[a * order_ + b]; }
    [[nodiscard]] Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
    [[nodiscard]] Element neg(Element a) const { return neg_[a]; }
    [[nodiscard]] Element sub(Element a, Element b) const { return add(a, neg(b)); }
    /// Throws std::domain_error for 0.
    [[nodiscard]] Element inv(Element a) const;

    /// Exhaustive check of the field axioms; empty when all hold.
    [[nodiscard]] std::vector<std::string> axiom_failures() const;

private:
    int order_;
    int characteristic_ = 0;
    int degree_ = 0;
    std::vector<Element> add_;
    std::vector<Element> mul_;
    std::vector<Element> neg_;
    std::vector<Element> inv_;
};

using FieldVector = std::vector<FiniteField::Element>;

/// A subspace of F_q^ambient held by its reduced row-echelon basis, which is
/// unique per subspace.
class Subspace {
public:
    Subspace() = default;
    /// Row space of `rows`; every row must have length `ambient`.
    Subspace(const FiniteField& field, std::vector<FieldVector> rows, std::size_t ambient);

    [[nodiscard]] std::size_t ambient() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<FieldVector>& basis() const { return basis_; }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<FieldVector> basis_;
};

/// Rank of the row set over the field.
[[nodiscard]] std::size_t rank(const FiniteField& field, std::vector<FieldVector> rows, std::size_t ambient);

[[nodiscard]] Subspace span_sum(const FiniteField& field, const Subspace& a, const Subspace& b);
[[nodiscard]] std::size_t intersection_dim(const FiniteField& field, const Subspace& a, const Subspace& b);

/// All dim-dimensional subspaces of F_q^ambient, ordered by pivot set then by
/// free entries.
[[nodiscard]] std::vector<Subspace> enumerate_subspaces(const FiniteField& field, std::size_t ambient,
                                                        std::size_t dim);

} // namespace atlas
