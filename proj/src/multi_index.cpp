#include "scheme_atlas/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace atlas {

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t axis)
{
    if (axis >= dim) {
        throw std::invalid_argument("MultiIndex::unit: axis out of range");
    }
    std::vector<int> entries(dim, 0);
    entries[axis] = 1;
    return MultiIndex(std::move(entries));
}

int MultiIndex::degree() const
{
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool MultiIndex::is_nonnegative() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v >= 0; });
}

bool MultiIndex::dominated_by(const MultiIndex& other) const
{
    if (size() != other.size()) {
        throw std::invalid_argument("MultiIndex: dimension mismatch");
    }
    for (std::size_t i = 0; i < size(); ++i) {
        if (entries_[i] > other.entries_[i]) {
            return false;
        }
    }
    return true;
}

std::string MultiIndex::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(entries_[i]);
    }
    return out + ")";
}

namespace {

template <typename Op>
MultiIndex combine(const MultiIndex& a, const MultiIndex& b, Op op)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("MultiIndex: dimension mismatch " + a.str() + " vs " + b.str());
    }
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = op(a[i], b[i]);
    }
    return MultiIndex(std::move(out));
}

} // namespace

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b)
{
    return combine(a, b, std::plus<int>());
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b)
{
    return combine(a, b, std::minus<int>());
}

MonomialOrder MonomialOrder::grlex_reversed(std::size_t dim)
{
    MonomialOrder order = grlex();
    for (std::size_t i = dim; i-- > 0;) {
        order.priority.push_back(i);
    }
    return order;
}

std::string MonomialOrder::str() const
{
    std::string out = strategy == Strategy::lex ? "lex" : "grlex";
    if (!priority.empty()) {
        out += '[';
        for (std::size_t i = 0; i < priority.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(priority[i]);
        }
        out += ']';
    }
    return out;
}

std::weak_ordering compare(const MonomialOrder& order, const MultiIndex& a, const MultiIndex& b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("compare: dimension mismatch " + a.str() + " vs " + b.str());
    }
    if (!order.priority.empty()) {
        if (order.priority.size() != a.size()) {
            throw std::invalid_argument("compare: priority length differs from dimension");
        }
        std::vector<bool> seen(a.size(), false);
        for (std::size_t axis : order.priority) {
            if (axis >= a.size() || seen[axis]) {
                throw std::invalid_argument("compare: priority is not a permutation");
            }
            seen[axis] = true;
        }
    }
    if (order.strategy == MonomialOrder::Strategy::grlex) {
        if (auto c = a.degree() <=> b.degree(); c != 0) {
            return c;
        }
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::size_t axis = order.priority.empty() ? i : order.priority[i];
        if (auto c = a[axis] <=> b[axis]; c != 0) {
            return c;
        }
    }
    return std::weak_ordering::equivalent;
}

std::vector<MonomialOrder> all_orders(std::size_t dim)
{
    std::vector<std::size_t> perm(dim);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<MonomialOrder> out;
    do {
        out.push_back({MonomialOrder::Strategy::grlex, perm});
        out.push_back({MonomialOrder::Strategy::lex, perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Domain::Domain(std::vector<MultiIndex> members) : members_(std::move(members))
{
    if (!members_.empty()) {
        dim_ = members_.front().size();
    }
    for (const auto& alpha : members_) {
        if (alpha.size() != dim_) {
            throw std::invalid_argument("Domain: mixed dimensions");
        }
        if (!alpha.is_nonnegative()) {
            throw std::invalid_argument("Domain: negative entry in " + alpha.str());
        }
    }
    const auto order = MonomialOrder::grlex();
    std::sort(members_.begin(), members_.end(),
              [&](const MultiIndex& a, const MultiIndex& b) { return compare(order, a, b) < 0; });
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (!lookup_.emplace(members_[i], i).second) {
            throw std::invalid_argument("Domain: duplicate member " + members_[i].str());
        }
    }
}

Domain Domain::simplex(std::size_t dim, int bound)
{
    std::vector<MultiIndex> members;
    std::vector<int> current(dim, 0);
    // Odometer over [0,bound]^dim, keeping points of degree <= bound.
    while (true) {
        if (std::accumulate(current.begin(), current.end(), 0) <= bound) {
            members.emplace_back(current);
        }
        std::size_t axis = 0;
        while (axis < dim && current[axis] == bound) {
            current[axis] = 0;
            ++axis;
        }
        if (axis == dim) {
            break;
        }
        ++current[axis];
    }
    return Domain(std::move(members));
}

Domain Domain::interval(int bound)
{
    std::vector<MultiIndex> members;
    for (int i = 0; i <= bound; ++i) {
        members.push_back(MultiIndex{i});
    }
    return Domain(std::move(members));
}

std::optional<std::size_t> Domain::position(const MultiIndex& alpha) const
{
    if (auto it = lookup_.find(alpha); it != lookup_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::size_t Domain::require_position(const MultiIndex& alpha) const
{
    if (auto pos = position(alpha)) {
        return *pos;
    }
    throw std::out_of_range("index " + alpha.str() + " not in domain");
}

bool is_downward_closed(const Domain& domain)
{
    for (const auto& alpha : domain) {
        for (std::size_t axis = 0; axis < alpha.size(); ++axis) {
            if (alpha[axis] > 0 && !domain.contains(alpha - MultiIndex::unit(alpha.size(), axis))) {
                return false;
            }
        }
    }
    return true;
}

} // namespace atlas
