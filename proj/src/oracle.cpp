#include "scheme_atlas/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "scheme_atlas/families.hpp"
#include "scheme_atlas/qarith.hpp"

namespace atlas {

OracleError::OracleError(std::string axiom, std::string witness)
    : std::runtime_error(axiom + ": " + witness), axiom_(std::move(axiom)), witness_(std::move(witness))
{
}

SizeGuardError::SizeGuardError(const Integer& requested, std::size_t limit)
    : std::runtime_error("oracle size guard: " + requested.get_str() + " points exceeds limit "
                         + std::to_string(limit) + " (set SCHEME_ATLAS_MAX_POINTS to raise it)")
{
}

std::size_t oracle_point_limit()
{
    constexpr std::size_t fallback = 2000;
    const char* env = std::getenv("SCHEME_ATLAS_MAX_POINTS");
    if (env == nullptr || *env == '\0') {
        return fallback;
    }
    char* end = nullptr;
    const long long value = std::strtoll(env, &end, 10);
    if (*end != '\0' || value <= 0) {
        return fallback;
    }
    return static_cast<std::size_t>(value);
}

void enforce_point_limit(const Integer& points)
{
    const std::size_t limit = oracle_point_limit();
    if (points > Integer(static_cast<unsigned long>(limit))) {
        throw SizeGuardError(points, limit);
    }
}

int WeightedVector::weight() const
{
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](int v) { return v != 0; }));
}

std::vector<WeightedVector> enumerate_nbj_points(int r, int n, int k)
{
    if (r < 2 || n < 0 || k < 0 || k > n) {
        throw std::invalid_argument("enumerate_nbj_points: requires r >= 2, 0 <= k <= n");
    }
    std::vector<WeightedVector> out;
    std::vector<bool> select(static_cast<std::size_t>(n), false);
    std::fill(select.begin(), select.begin() + k, true);
    do {
        std::vector<int> support;
        for (int c = 0; c < n; ++c) {
            if (select[c]) {
                support.push_back(c);
            }
        }
        std::vector<int> values(static_cast<std::size_t>(k), 1);
        while (true) {
            WeightedVector x{std::vector<int>(static_cast<std::size_t>(n), 0)};
            for (int s = 0; s < k; ++s) {
                x.entries[support[s]] = values[s];
            }
            out.push_back(std::move(x));
            int s = k;
            while (s > 0 && values[s - 1] == r - 1) {
                values[s - 1] = 1;
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

MultiIndex nbj_relation(const WeightedVector& x, const WeightedVector& y, int k)
{
    if (x.entries.size() != y.entries.size() || x.weight() != k || y.weight() != k) {
        throw std::invalid_argument("nbj_relation: both words must have weight " + std::to_string(k));
    }
    int common = 0;
    int equal = 0;
    for (std::size_t c = 0; c < x.entries.size(); ++c) {
        if (x.entries[c] != 0 && y.entries[c] != 0) {
            ++common;
            if (x.entries[c] == y.entries[c]) {
                ++equal;
            }
        }
    }
    return {common - equal, k - common};
}

Subspace attenuated_complement(const FiniteField& field, int n, int l)
{
    const auto ambient = static_cast<std::size_t>(n + l);
    std::vector<FieldVector> rows;
    for (int i = 0; i < l; ++i) {
        FieldVector row(ambient, 0);
        row[static_cast<std::size_t>(n + i)] = 1;
        rows.push_back(std::move(row));
    }
    return Subspace(field, std::move(rows), ambient);
}

std::vector<Subspace> enumerate_attenuated_points(const FiniteField& field, int n, int m, int l)
{
    if (m < 0 || m > n || l < 0) {
        throw std::invalid_argument("enumerate_attenuated_points: requires 0 <= m <= n, l >= 0");
    }
    const auto heads = enumerate_subspaces(field, static_cast<std::size_t>(n), static_cast<std::size_t>(m));
    const auto ambient = static_cast<std::size_t>(n + l);
    const std::size_t tail_slots = static_cast<std::size_t>(m) * static_cast<std::size_t>(l);
    const int q = field.order();
    std::vector<Subspace> out;
    for (const auto& head : heads) {
        std::vector<int> values(tail_slots, 0);
        while (true) {
            std::vector<FieldVector> rows;
            for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r) {
                FieldVector row(head.basis()[r]);
                row.resize(ambient, 0);
                for (std::size_t c = 0; c < static_cast<std::size_t>(l); ++c) {
                    row[static_cast<std::size_t>(n) + c] = static_cast<FiniteField::Element>(values[r * l + c]);
                }
                rows.push_back(std::move(row));
            }
            out.emplace_back(field, std::move(rows), ambient);
            std::size_t s = tail_slots;
            while (s > 0 && values[s - 1] == q - 1) {
                values[s - 1] = 0;
                --s;
            }
            if (s == 0) {
                break;
            }
            ++values[s - 1];
        }
    }
    return out;
}

std::vector<Subspace> enumerate_attenuated_points(int n, int m, int l, int q)
{
    const FiniteField field(q);
    if (m >= 0 && m <= n && l >= 0) {
        enforce_point_limit(int_pow(q, static_cast<long>(m) * l) * q_binomial(n, m, q));
    }
    return enumerate_attenuated_points(field, n, m, l);
}

MultiIndex attenuated_relation(const FiniteField& field, const Subspace& v, const Subspace& other,
                               const Subspace& complement, int m)
{
    for (const Subspace* s : {&v, &other}) {
        if (s->dim() != static_cast<std::size_t>(m) || s->ambient() != complement.ambient()
            || intersection_dim(field, *s, complement) != 0) {
            throw std::invalid_argument("attenuated_relation: argument is not an attenuated point");
        }
    }
    const std::size_t w = complement.dim();
    const Subspace lifted = span_sum(field, v, complement);
    const Subspace lifted_other = span_sum(field, other, complement);
    const auto quotient_meet = static_cast<int>(intersection_dim(field, lifted, lifted_other) - w);
    const int grassmann = m - quotient_meet;
    const int bilinear = (m - grassmann) - static_cast<int>(intersection_dim(field, v, other));
    return {bilinear, grassmann};
}

std::vector<long> ConcreteScheme::valencies() const
{
    std::vector<long> out;
    for (const auto& a : adjacency_) {
        out.push_back(a.row(0).sum());
    }
    return out;
}

std::string ConcreteScheme::dump(std::string_view family, std::string_view params) const
{
    std::ostringstream os;
    os << family << ' ' << params << ' ' << num_points() << ' ' << classes_.size() << '\n';
    for (std::size_t x = 0; x < num_points(); ++x) {
        for (std::size_t y = 0; y < num_points(); ++y) {
            if (y > 0) {
                os << ' ';
            }
            const auto& label = classes_.at(relation(x, y)).entries();
            for (std::size_t i = 0; i < label.size(); ++i) {
                os << (i > 0 ? "," : "") << label[i];
            }
        }
        os << '\n';
    }
    return os.str();
}

namespace {

std::string pair_text(std::size_t x, std::size_t y)
{
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

} // namespace

ConcreteScheme build_concrete_scheme(std::size_t num_points,
                                     const std::function<MultiIndex(std::size_t, std::size_t)>& relation)
{
    if (num_points == 0) {
        throw OracleError("points", "empty point set");
    }
    enforce_point_limit(Integer(static_cast<unsigned long>(num_points)));
    const auto N = static_cast<Eigen::Index>(num_points);

    std::vector<MultiIndex> raw(num_points * num_points);
    std::map<MultiIndex, int> seen;
    for (std::size_t x = 0; x < num_points; ++x) {
        for (std::size_t y = 0; y < num_points; ++y) {
            MultiIndex label = relation(x, y);
            if (!label.is_nonnegative()) {
                throw OracleError("labels", "negative label " + label.str() + " at " + pair_text(x, y));
            }
            seen.emplace(label, 0);
            raw[x * num_points + y] = std::move(label);
        }
    }
    std::vector<MultiIndex> image;
    for (const auto& [label, unused] : seen) {
        image.push_back(label);
    }
    const std::size_t dim = image.front().size();
    for (const auto& label : image) {
        if (label.size() != dim) {
            throw OracleError("labels", "mixed label dimensions");
        }
    }

    ConcreteScheme s;
    s.classes_ = Domain(std::move(image));
    const std::size_t d = s.classes_.size();
    s.labels_ = Matrix<int>(N, N);
    s.adjacency_.assign(d, IntMatrix::Zero(N, N));
    std::vector<std::pair<std::size_t, std::size_t>> representative(d, {num_points, num_points});
    for (std::size_t x = 0; x < num_points; ++x) {
        for (std::size_t y = 0; y < num_points; ++y) {
            const std::size_t c = *s.classes_.position(raw[x * num_points + y]);
            s.labels_(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = static_cast<int>(c);
            s.adjacency_[c](static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = 1;
            if (representative[c].first == num_points) {
                representative[c] = {x, y};
            }
        }
    }

    // (A1) the relations partition X x X.
    IntMatrix total = IntMatrix::Zero(N, N);
    for (const auto& a : s.adjacency_) {
        total += a;
    }
    if (total != IntMatrix::Ones(N, N)) {
        throw OracleError("A1", "adjacency matrices do not sum to J");
    }
    // (A2) the zero label is exactly the diagonal.
    const auto zero = s.classes_.position(MultiIndex::zero(dim));
    if (!zero) {
        throw OracleError("A2", "zero label " + MultiIndex::zero(dim).str() + " never occurs");
    }
    for (std::size_t x = 0; x < num_points; ++x) {
        for (std::size_t y = 0; y < num_points; ++y) {
            if ((s.relation(x, y) == *zero) != (x == y)) {
                throw OracleError("A2", "pair " + pair_text(x, y) + " has label "
                                            + s.classes_.at(s.relation(x, y)).str());
            }
        }
    }
    // (A3) the transpose of each relation is a relation; (A6) it is itself.
    for (std::size_t c = 0; c < d; ++c) {
        const auto [rx, ry] = representative[c];
        const std::size_t partner = s.relation(ry, rx);
        if (s.adjacency_[c].transpose() != s.adjacency_[partner]) {
            throw OracleError("A3", "transpose of class " + s.classes_.at(c).str() + " is not a class");
        }
    }
    for (std::size_t c = 0; c < d; ++c) {
        if (s.adjacency_[c].transpose() != s.adjacency_[c]) {
            const auto [rx, ry] = representative[c];
            throw OracleError("A6", "class " + s.classes_.at(c).str() + " is not symmetric, e.g. "
                                        + pair_text(rx, ry) + " vs " + pair_text(ry, rx));
        }
    }
    // (A4) triple counts constant on classes, i.e. A_a A_b lies in the span
    // with coefficients p^c_{ab}; (A5) commutativity, p^c_{ab} = p^c_{ba}.
    s.intersection_ = IntersectionTensor(d);
    std::vector<bool> filled(d, false);
    std::vector<long> counts(d * d);
    for (std::size_t x = 0; x < num_points; ++x) {
        for (std::size_t y = 0; y < num_points; ++y) {
            std::fill(counts.begin(), counts.end(), 0L);
            for (std::size_t z = 0; z < num_points; ++z) {
                ++counts[s.relation(x, z) * d + s.relation(z, y)];
            }
            const std::size_t c = s.relation(x, y);
            if (!filled[c]) {
                for (std::size_t ab = 0; ab < d * d; ++ab) {
                    s.intersection_(ab / d, ab % d, c) = Rational(counts[ab]);
                }
                filled[c] = true;
                continue;
            }
            for (std::size_t ab = 0; ab < d * d; ++ab) {
                const Rational count(counts[ab]);
                const std::size_t a = ab / d;
                const std::size_t b = ab % d;
                if (count != s.intersection_(a, b, c)) {
                    const auto [rx, ry] = representative[c];
                    throw OracleError("A4", "p^" + s.classes_.at(c).str() + "_{" + s.classes_.at(a).str() + ","
                                                + s.classes_.at(b).str() + "} counts " + s.intersection_(a, b, c).str()
                                                + " at " + pair_text(rx, ry) + " but " + count.str() + " at "
                                                + pair_text(x, y));
                }
            }
        }
    }
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = a + 1; b < d; ++b) {
                if (s.intersection_(a, b, c) != s.intersection_(b, a, c)) {
                    throw OracleError("A5", "A_" + s.classes_.at(a).str() + " and A_" + s.classes_.at(b).str()
                                                + " do not commute: p^" + s.classes_.at(c).str() + " differs");
                }
            }
        }
    }
    return s;
}

ConcreteScheme build_nonbinary_johnson_scheme(int r, int n, int k)
{
    if (r < 2 || k < 0 || k > n) {
        throw std::invalid_argument("build_nonbinary_johnson_scheme: requires r >= 2, 0 <= k <= n");
    }
    enforce_point_limit(int_pow(r - 1, k) * binomial(n, k));
    const auto points = enumerate_nbj_points(r, n, k);
    return build_concrete_scheme(points, [k](const WeightedVector& x, const WeightedVector& y) {
        return nbj_relation(x, y, k);
    });
}

ConcreteScheme build_attenuated_scheme(int n, int m, int l, int q)
{
    const FiniteField field(q);
    const auto points = enumerate_attenuated_points(n, m, l, q);
    const Subspace complement = attenuated_complement(field, n, l);
    return build_concrete_scheme(points, [&](const Subspace& v, const Subspace& other) {
        return attenuated_relation(field, v, other, complement, m);
    });
}

namespace {

void require_aligned(const ConcreteScheme& s, const SpectralTable& t)
{
    if (!(s.classes() == t.relations())) {
        throw std::invalid_argument("oracle: relation labels of the scheme and the table differ");
    }
    if (Integer(static_cast<unsigned long>(s.num_points())) != t.size()) {
        throw std::invalid_argument("oracle: point count differs from the table");
    }
}

// First entry where two matrices differ, as a discrepancy.
void compare_matrix(const RationalMatrix& got, const RationalMatrix& expected, const std::string& check,
                    std::vector<MultiIndex> indices, std::vector<Discrepancy>& out)
{
    for (Eigen::Index x = 0; x < got.rows(); ++x) {
        for (Eigen::Index y = 0; y < got.cols(); ++y) {
            if (got(x, y) != expected(x, y)) {
                indices.push_back(MultiIndex{static_cast<int>(x), static_cast<int>(y)});
                out.push_back({check, std::move(indices), expected(x, y), got(x, y)});
                return;
            }
        }
    }
}

} // namespace

RationalMatrix adjacency_times(const IntMatrix& A, const RationalMatrix& M)
{
    RationalMatrix out = RationalMatrix::Zero(A.rows(), M.cols());
    for (Eigen::Index x = 0; x < A.rows(); ++x) {
        for (Eigen::Index z = 0; z < A.cols(); ++z) {
            if (A(x, z) != 0) {
                out.row(x) += M.row(z);
            }
        }
    }
    return out;
}

IdempotentSet build_idempotents(const ConcreteScheme& s, const SpectralTable& t)
{
    require_aligned(s, t);
    const auto N = static_cast<Eigen::Index>(s.num_points());
    const std::size_t d = t.idempotents().size();
    const Rational size(t.size());
    const auto& Q = t.Q();
    const auto& P = t.P();
    const auto& labels = t.idempotents();

    IdempotentSet out;
    for (std::size_t b = 0; b < d; ++b) {
        RationalMatrix E(N, N);
        std::vector<Rational> by_class(d);
        for (std::size_t a = 0; a < d; ++a) {
            by_class[a] = Q(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) / size;
        }
        for (Eigen::Index x = 0; x < N; ++x) {
            for (Eigen::Index y = 0; y < N; ++y) {
                E(x, y) = by_class[s.relation(static_cast<std::size_t>(x), static_cast<std::size_t>(y))];
            }
        }
        out.matrices.push_back(std::move(E));
    }

    const RationalMatrix zero = RationalMatrix::Zero(N, N);
    compare_matrix(out.matrices[t.trivial_idempotent()], RationalMatrix::Constant(N, N, reciprocal(size)), "E_0=J/|X|",
                   {labels.at(t.trivial_idempotent())}, out.failures);
    RationalMatrix sum = zero;
    for (std::size_t b = 0; b < d; ++b) {
        const RationalMatrix& E = out.matrices[b];
        sum += E;
        compare_matrix(E * E, E, "E^2=E", {labels.at(b)}, out.failures);
        for (std::size_t c = b + 1; c < d; ++c) {
            compare_matrix(E * out.matrices[c], zero, "E_bE_c=0", {labels.at(b), labels.at(c)}, out.failures);
        }
        if (Rational trace = E.trace(); trace != t.multiplicities()(static_cast<Eigen::Index>(b))) {
            out.failures.push_back({"trace E=m", {labels.at(b)}, t.multiplicities()(static_cast<Eigen::Index>(b)), trace});
        }
        for (std::size_t a = 0; a < d; ++a) {
            const RationalMatrix AE = adjacency_times(s.adjacency(a), E);
            compare_matrix(AE, P(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) * E, "AE=PE",
                           {s.classes().at(a), labels.at(b)}, out.failures);
        }
    }
    compare_matrix(sum, RationalMatrix::Identity(N, N), "sum E=I", {}, out.failures);
    return out;
}

KreinTensor krein_by_hadamard(const ConcreteScheme& s, const SpectralTable& t, const IdempotentSet& idempotents)
{
    require_aligned(s, t);
    if (!idempotents.verified()) {
        throw OracleError("idempotents", idempotents.failures.front().str());
    }
    const auto N = static_cast<Eigen::Index>(s.num_points());
    const std::size_t d = t.idempotents().size();
    const Rational size(t.size());
    const auto& labels = t.idempotents();

    std::vector<std::pair<Eigen::Index, Eigen::Index>> representative(d, {-1, -1});
    for (Eigen::Index x = 0; x < N; ++x) {
        for (Eigen::Index y = 0; y < N; ++y) {
            auto& rep = representative[s.relation(static_cast<std::size_t>(x), static_cast<std::size_t>(y))];
            if (rep.first < 0) {
                rep = {x, y};
            }
        }
    }

    KreinTensor out(d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) {
            const RationalMatrix H =
                (size * idempotents.matrices[a]).cwiseProduct(size * idempotents.matrices[b]);
            std::vector<Rational> coeff(d);
            for (std::size_t c = 0; c < d; ++c) {
                coeff[c] = H(representative[c].first, representative[c].second);
            }
            for (Eigen::Index x = 0; x < N; ++x) {
                for (Eigen::Index y = 0; y < N; ++y) {
                    const std::size_t c = s.relation(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
                    if (H(x, y) != coeff[c]) {
                        throw OracleError("hadamard", "product for (" + labels.at(a).str() + "," + labels.at(b).str()
                                                          + ") is not constant on class " + s.classes().at(c).str());
                    }
                }
            }
            RationalMatrix rebuilt = RationalMatrix::Zero(N, N);
            for (std::size_t k = 0; k < d; ++k) {
                Rational value = 0;
                for (std::size_t c = 0; c < d; ++c) {
                    value += coeff[c] * t.P()(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(k));
                }
                value /= size;
                out(a, b, k) = value;
                out(b, a, k) = value;
                rebuilt += (value * size) * idempotents.matrices[k];
            }
            if (rebuilt != H) {
                throw OracleError("hadamard", "expansion residual nonzero for (" + labels.at(a).str() + ","
                                                  + labels.at(b).str() + ")");
            }
        }
    }
    return out;
}

} // namespace atlas
