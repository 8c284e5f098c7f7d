#include "scheme_atlas/finite_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace atlas {

namespace {

struct FieldSpec {
    int order;
    int prime;
    int degree;
    std::vector<int> modulus;  // monic, low degree first
};

const std::vector<FieldSpec>& supported_fields()
{
    static const std::vector<FieldSpec> specs = {
        {2, 2, 1, {0, 1}},
        {3, 3, 1, {0, 1}},
        {4, 2, 2, {1, 1, 1}},     // x^2 + x + 1
        {5, 5, 1, {0, 1}},
        {7, 7, 1, {0, 1}},
        {8, 2, 3, {1, 1, 0, 1}},  // x^3 + x + 1
        {9, 3, 2, {1, 0, 1}},     // x^2 + 1
    };
    return specs;
}

const FieldSpec* find_spec(int order)
{
    for (const auto& spec : supported_fields()) {
        if (spec.order == order) {
            return &spec;
        }
    }
    return nullptr;
}

std::vector<int> digits(int value, int base, int count)
{
    std::vector<int> out(count);
    for (int i = 0; i < count; ++i) {
        out[i] = value % base;
        value /= base;
    }
    return out;
}

int from_digits(const std::vector<int>& d, int base)
{
    int value = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
        value = value * base + *it;
    }
    return value;
}

} // namespace

bool FiniteField::is_prime_power(int order)
{
    if (order < 2) {
        return false;
    }
    int p = 2;
    while (order % p != 0) {
        ++p;
    }
    while (order % p == 0) {
        order /= p;
    }
    return order == 1;
}

bool FiniteField::is_supported(int order) { return find_spec(order) != nullptr; }

FiniteField::FiniteField(int order) : order_(order)
{
    const FieldSpec* spec = find_spec(order);
    if (spec == nullptr) {
        throw std::invalid_argument("FiniteField: unsupported order " + std::to_string(order)
                                    + (is_prime_power(order) ? " (prime powers up to 9 only)" : " (not a prime power)"));
    }
    characteristic_ = spec->prime;
    degree_ = spec->degree;
    const int p = characteristic_;
    const int e = degree_;
    const auto q = static_cast<std::size_t>(order_);
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (int a = 0; a < order_; ++a) {
        const auto da = digits(a, p, e);
        std::vector<int> dn(e);
        for (int i = 0; i < e; ++i) {
            dn[i] = (p - da[i]) % p;
        }
        neg_[a] = static_cast<Element>(from_digits(dn, p));
        for (int b = 0; b < order_; ++b) {
            const auto db = digits(b, p, e);
            std::vector<int> sum(e);
            for (int i = 0; i < e; ++i) {
                sum[i] = (da[i] + db[i]) % p;
            }
            add_[a * order_ + b] = static_cast<Element>(from_digits(sum, p));

            std::vector<int> prod(2 * e - 1, 0);
            for (int i = 0; i < e; ++i) {
                for (int j = 0; j < e; ++j) {
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                }
            }
            // Reduce modulo the monic modulus, highest degree first.
            for (int deg = 2 * e - 2; deg >= e; --deg) {
                const int c = prod[deg];
                if (c == 0) {
                    continue;
                }
                for (int i = 0; i <= e; ++i) {
                    const int idx = deg - e + i;
                    prod[idx] = ((prod[idx] - c * spec->modulus[i]) % p + p) % p;
                }
            }
            prod.resize(e);
            mul_[a * order_ + b] = static_cast<Element>(from_digits(prod, p));
        }
    }
    for (int a = 1; a < order_; ++a) {
        for (int b = 1; b < order_; ++b) {
            if (mul_[a * order_ + b] == 1) {
                inv_[a] = static_cast<Element>(b);
            }
        }
    }
}

FiniteField::Element FiniteField::inv(Element a) const
{
    if (a == 0) {
        throw std::domain_error("FiniteField: inverse of zero");
    }
    return inv_[a];
}

std::vector<std::string> FiniteField::axiom_failures() const
{
    std::vector<std::string> out;
    auto fail = [&](const std::string& what, int a, int b, int c) {
        out.push_back(what + " at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    };
    const int q = order_;
    for (int a = 0; a < q; ++a) {
        const auto x = static_cast<Element>(a);
        if (add(x, 0) != x) fail("additive identity", a, 0, 0);
        if (mul(x, 1) != x) fail("multiplicative identity", a, 1, 0);
        if (add(x, neg(x)) != 0) fail("additive inverse", a, 0, 0);
        if (a != 0 && mul(x, inv(x)) != 1) fail("multiplicative inverse", a, 0, 0);
        for (int b = 0; b < q; ++b) {
            const auto y = static_cast<Element>(b);
            if (add(x, y) != add(y, x)) fail("additive commutativity", a, b, 0);
            if (mul(x, y) != mul(y, x)) fail("multiplicative commutativity", a, b, 0);
            if (a != 0 && b != 0 && mul(x, y) == 0) fail("zero divisor", a, b, 0);
            for (int c = 0; c < q; ++c) {
                const auto z = static_cast<Element>(c);
                if (add(add(x, y), z) != add(x, add(y, z))) fail("additive associativity", a, b, c);
                if (mul(mul(x, y), z) != mul(x, mul(y, z))) fail("multiplicative associativity", a, b, c);
                if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) fail("distributivity", a, b, c);
            }
        }
    }
    if (q < 2 || add(1, 0) == 0) {
        out.push_back("0 equals 1");
    }
    return out;
}

namespace {

// In-place reduced row-echelon form; returns the nonzero rows.
std::vector<FieldVector> rref(const FiniteField& F, std::vector<FieldVector> rows, std::size_t ambient)
{
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ambient && pivot_row < rows.size(); ++col) {
        std::size_t r = pivot_row;
        while (r < rows.size() && rows[r][col] == 0) {
            ++r;
        }
        if (r == rows.size()) {
            continue;
        }
        std::swap(rows[pivot_row], rows[r]);
        const auto scale = F.inv(rows[pivot_row][col]);
        for (auto& v : rows[pivot_row]) {
            v = F.mul(v, scale);
        }
        for (std::size_t other = 0; other < rows.size(); ++other) {
            if (other == pivot_row || rows[other][col] == 0) {
                continue;
            }
            const auto factor = rows[other][col];
            for (std::size_t c = 0; c < ambient; ++c) {
                rows[other][c] = F.sub(rows[other][c], F.mul(factor, rows[pivot_row][c]));
            }
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

} // namespace

Subspace::Subspace(const FiniteField& field, std::vector<FieldVector> rows, std::size_t ambient) : ambient_(ambient)
{
    for (const auto& row : rows) {
        if (row.size() != ambient) {
            throw std::invalid_argument("Subspace: row length differs from ambient dimension");
        }
        for (auto v : row) {
            if (v >= field.order()) {
                throw std::invalid_argument("Subspace: entry outside the field");
            }
        }
    }
    basis_ = rref(field, std::move(rows), ambient);
}

std::size_t rank(const FiniteField& field, std::vector<FieldVector> rows, std::size_t ambient)
{
    return rref(field, std::move(rows), ambient).size();
}

Subspace span_sum(const FiniteField& field, const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient()) {
        throw std::invalid_argument("span_sum: ambient dimension mismatch");
    }
    std::vector<FieldVector> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace(field, std::move(rows), a.ambient());
}

std::size_t intersection_dim(const FiniteField& field, const Subspace& a, const Subspace& b)
{
    return a.dim() + b.dim() - span_sum(field, a, b).dim();
}

std::vector<Subspace> enumerate_subspaces(const FiniteField& field, std::size_t ambient, std::size_t dim)
{
    std::vector<Subspace> out;
    if (dim > ambient) {
        return out;
    }
    const int q = field.order();
    std::vector<bool> select(ambient, false);
    std::fill(select.begin(), select.begin() + static_cast<std::ptrdiff_t>(dim), true);
    // prev_permutation over a sorted-descending mask walks pivot sets in lex order.
    do {
        std::vector<std::size_t> pivots;
        for (std::size_t c = 0; c < ambient; ++c) {
            if (select[c]) {
                pivots.push_back(c);
            }
        }
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = pivots[r] + 1; c < ambient; ++c) {
                if (!select[c]) {
                    free_slots.emplace_back(r, c);
                }
            }
        }
        std::vector<int> values(free_slots.size(), 0);
        while (true) {
            std::vector<FieldVector> rows(dim, FieldVector(ambient, 0));
            for (std::size_t r = 0; r < dim; ++r) {
                rows[r][pivots[r]] = 1;
            }
            for (std::size_t s = 0; s < free_slots.size(); ++s) {
                rows[free_slots[s].first][free_slots[s].second] = static_cast<FiniteField::Element>(values[s]);
            }
            out.emplace_back(field, std::move(rows), ambient);
            std::size_t s = free_slots.size();
            while (s > 0 && values[s - 1] == q - 1) {
                values[s - 1] = 0;
                --s;
            }
            if (s == 0) {
                break;
            }
            ++values[s - 1];
        }
    } while (std::prev_permutation(select.begin(), select.end()));
    return out;
}

} // namespace atlas
