#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace atlas {

/// A tuple in N^l. Arithmetic may produce negative entries; members of a
/// Domain never have them.
class MultiIndex {
public:
    MultiIndex() = default;
    MultiIndex(std::initializer_list<int> entries) : entries_(entries) {}
    explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {}

    static MultiIndex zero(std::size_t dim) { return MultiIndex(std::vector<int>(dim, 0)); }
    /// The generator e_axis.
    static MultiIndex unit(std::size_t dim, std::size_t axis);

    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] const std::vector<int>& entries() const { return entries_; }

    /// Sum of entries.
    [[nodiscard]] int degree() const;
    [[nodiscard]] bool is_nonnegative() const;
    /// Coordinatewise <=.
    [[nodiscard]] bool dominated_by(const MultiIndex& other) const;

    /// "(1,0)".
    [[nodiscard]] std::string str() const;

    /// Both throw std::invalid_argument on dimension mismatch.
    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
    friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

    /// Plain lexicographic comparison of the entry vectors (container ordering,
    /// not a monomial order).
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> entries_;
};

/// Total orders on N^l compatible with addition. `priority` lists the
/// coordinates from most to least significant; empty means 0,1,...,l-1.
struct MonomialOrder {
    enum class Strategy { lex, grlex };
    Strategy strategy = Strategy::grlex;
    std::vector<std::size_t> priority;

    static MonomialOrder lex() { return {Strategy::lex, {}}; }
    static MonomialOrder grlex() { return {Strategy::grlex, {}}; }
    /// grlex with coordinates read right to left.
    static MonomialOrder grlex_reversed(std::size_t dim);

    [[nodiscard]] std::string str() const;
    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Throws std::invalid_argument on dimension mismatch or a malformed priority.
[[nodiscard]] std::weak_ordering compare(const MonomialOrder& order, const MultiIndex& a, const MultiIndex& b);

/// All lex/grlex orders with every variable priority of the given dimension.
[[nodiscard]] std::vector<MonomialOrder> all_orders(std::size_t dim);

/// A finite set of MultiIndex values of one dimension, stored in grlex
/// ascending order. Positions in that order index the rows and columns of
/// every matrix and tensor built over the domain.
class Domain {
public:
    Domain() = default;
    /// Throws std::invalid_argument on duplicates, negative entries, or mixed
    /// dimensions.
    explicit Domain(std::vector<MultiIndex> members);

    /// {alpha : |alpha| <= bound}.
    static Domain simplex(std::size_t dim, int bound);
    /// {(0),(1),...,(bound)}.
    static Domain interval(int bound);

    [[nodiscard]] std::size_t dimension() const { return dim_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] const MultiIndex& at(std::size_t pos) const { return members_.at(pos); }
    [[nodiscard]] const std::vector<MultiIndex>& members() const { return members_; }
    [[nodiscard]] std::optional<std::size_t> position(const MultiIndex& alpha) const;
    /// Throws std::out_of_range with the index text when absent.
    [[nodiscard]] std::size_t require_position(const MultiIndex& alpha) const;
    [[nodiscard]] bool contains(const MultiIndex& alpha) const { return position(alpha).has_value(); }

    [[nodiscard]] auto begin() const { return members_.begin(); }
    [[nodiscard]] auto end() const { return members_.end(); }

    friend bool operator==(const Domain& a, const Domain& b) { return a.members_ == b.members_; }

private:
    std::size_t dim_ = 0;
    std::vector<MultiIndex> members_;
    std::map<MultiIndex, std::size_t> lookup_;
};

[[nodiscard]] bool is_downward_closed(const Domain& domain);

} // namespace atlas
