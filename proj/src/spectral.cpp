#include "scheme_atlas/spectral.hpp"

#include <stdexcept>

namespace atlas {

std::string to_string(Reduction reduction)
{
    switch (reduction) {
    case Reduction::none: return "none";
    case Reduction::johnson: return "johnson";
    case Reduction::hamming: return "hamming";
    case Reduction::bilinear: return "bilinear";
    }
    return "unknown";
}

namespace {

[[noreturn]] void reject(const std::string& label, const std::string& what)
{
    throw std::invalid_argument("SpectralTable " + label + ": " + what);
}

bool is_positive_integer(const Rational& x) { return x.is_integer() && x.sign() > 0; }

} // namespace

SpectralTable::SpectralTable(std::string label, Integer size, Domain relations, Domain idempotents, RationalMatrix P,
                             RationalMatrix Q, RationalVector valencies, RationalVector multiplicities,
                             Reduction reduction)
    : label_(std::move(label)), size_(std::move(size)), relations_(std::move(relations)),
      idempotents_(std::move(idempotents)), P_(std::move(P)), Q_(std::move(Q)), valencies_(std::move(valencies)),
      multiplicities_(std::move(multiplicities)), reduction_(reduction)
{
    const auto d = static_cast<Eigen::Index>(relations_.size());
    const auto e = static_cast<Eigen::Index>(idempotents_.size());
    if (d == 0 || d != e) {
        reject(label_, "relation and idempotent domains must be nonempty and equinumerous");
    }
    if (P_.rows() != d || P_.cols() != e || Q_.rows() != e || Q_.cols() != d) {
        reject(label_, "eigenmatrix shape does not match the domains");
    }
    if (valencies_.size() != d || multiplicities_.size() != e) {
        reject(label_, "parameter vector length does not match the domains");
    }
    if (size_ <= 0) {
        reject(label_, "point count must be positive");
    }
    const auto o_rel = relations_.position(MultiIndex::zero(relations_.dimension()));
    const auto o_idem = idempotents_.position(MultiIndex::zero(idempotents_.dimension()));
    if (!o_rel || !o_idem) {
        reject(label_, "zero index missing from a domain");
    }
    trivial_relation_ = *o_rel;
    trivial_idempotent_ = *o_idem;

    for (Eigen::Index b = 0; b < e; ++b) {
        if (P_(trivial_relation_, b) != 1) {
            reject(label_, "P row of the trivial relation is not all ones at " + idempotents_.at(b).str());
        }
    }
    for (Eigen::Index a = 0; a < d; ++a) {
        if (Q_(trivial_idempotent_, a) != 1) {
            reject(label_, "Q row of the trivial idempotent is not all ones at " + relations_.at(a).str());
        }
    }
    for (Eigen::Index a = 0; a < d; ++a) {
        if (!is_positive_integer(valencies_(a))) {
            reject(label_, "valency of " + relations_.at(a).str() + " is not a positive integer: " + valencies_(a).str());
        }
        if (P_(a, trivial_idempotent_) != valencies_(a)) {
            reject(label_, "valency of " + relations_.at(a).str() + " differs from P column");
        }
    }
    for (Eigen::Index b = 0; b < e; ++b) {
        if (!is_positive_integer(multiplicities_(b))) {
            reject(label_, "multiplicity of " + idempotents_.at(b).str()
                               + " is not a positive integer: " + multiplicities_(b).str());
        }
        if (Q_(b, trivial_relation_) != multiplicities_(b)) {
            reject(label_, "multiplicity of " + idempotents_.at(b).str() + " differs from Q column");
        }
    }
    for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < e; ++b) {
            if (P_(a, b) * multiplicities_(b) != Q_(b, a) * valencies_(a)) {
                reject(label_, "not symmetric at (" + relations_.at(a).str() + ", " + idempotents_.at(b).str() + ")");
            }
        }
    }
}

std::string Discrepancy::str() const
{
    std::string out = check;
    for (const auto& alpha : indices) {
        out += ' ' + alpha.str();
    }
    return out + ": expected " + expected.str() + ", got " + got.str();
}

namespace {

Rational krein_at(const SpectralTable& t, Eigen::Index a, Eigen::Index b, Eigen::Index c)
{
    const auto& Q = t.Q();
    Rational sum = 0;
    for (Eigen::Index l = 0; l < Q.cols(); ++l) {
        sum += t.valencies()(l) * Q(a, l) * Q(b, l) * Q(c, l);
    }
    return sum / (Rational(t.size()) * t.multiplicities()(c));
}

Rational intersection_at(const SpectralTable& t, Eigen::Index a, Eigen::Index b, Eigen::Index c)
{
    const auto& P = t.P();
    Rational sum = 0;
    for (Eigen::Index l = 0; l < P.cols(); ++l) {
        sum += t.multiplicities()(l) * P(a, l) * P(b, l) * P(c, l);
    }
    return sum / (Rational(t.size()) * t.valencies()(c));
}

// rows(a) .* rows(b) .* weights, then contracted against every row.
Tensor3<Rational> structure_tensor(const RationalMatrix& rows, const RationalVector& weights,
                                   const RationalVector& normalizers, const Integer& size)
{
    const auto d = rows.rows();
    Tensor3<Rational> out(static_cast<std::size_t>(d));
    RationalVector scale(d);
    for (Eigen::Index c = 0; c < d; ++c) {
        scale(c) = reciprocal(Rational(size) * normalizers(c));
    }
    RationalVector w(rows.cols());
    for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = a; b < d; ++b) {
            for (Eigen::Index l = 0; l < rows.cols(); ++l) {
                w(l) = weights(l) * rows(a, l) * rows(b, l);
            }
            const RationalVector contracted = rows * w;
            for (Eigen::Index c = 0; c < d; ++c) {
                const Rational value = contracted(c) * scale(c);
                out(a, b, c) = value;
                out(b, a, c) = value;
            }
        }
    }
    return out;
}

} // namespace

Rational krein_from_spectral(const SpectralTable& t, const MultiIndex& a, const MultiIndex& b, const MultiIndex& c)
{
    const auto& dom = t.idempotents();
    return krein_at(t, dom.require_position(a), dom.require_position(b), dom.require_position(c));
}

Rational intersection_from_spectral(const SpectralTable& t, const MultiIndex& a, const MultiIndex& b,
                                   const MultiIndex& c)
{
    const auto& dom = t.relations();
    return intersection_at(t, dom.require_position(a), dom.require_position(b), dom.require_position(c));
}

KreinTensor krein_tensor(const SpectralTable& t)
{
    return structure_tensor(t.Q(), t.valencies(), t.multiplicities(), t.size());
}

IntersectionTensor intersection_tensor(const SpectralTable& t)
{
    return structure_tensor(t.P(), t.multiplicities(), t.valencies(), t.size());
}

Rational orthogonality_residual(const SpectralTable& t, const MultiIndex& a, const MultiIndex& b)
{
    const auto& dom = t.idempotents();
    const auto ia = static_cast<Eigen::Index>(dom.require_position(a));
    const auto ib = static_cast<Eigen::Index>(dom.require_position(b));
    Rational sum = 0;
    for (Eigen::Index l = 0; l < t.Q().cols(); ++l) {
        sum += t.valencies()(l) * t.Q()(ia, l) * t.Q()(ib, l);
    }
    if (ia == ib) {
        sum -= Rational(t.size()) * t.multiplicities()(ia);
    }
    return sum;
}

std::vector<Discrepancy> table_invariant_failures(const SpectralTable& t)
{
    std::vector<Discrepancy> out;
    const Rational size(t.size());
    const RationalMatrix PQ = t.P() * t.Q();
    for (Eigen::Index a = 0; a < PQ.rows(); ++a) {
        for (Eigen::Index c = 0; c < PQ.cols(); ++c) {
            const Rational expected = a == c ? size : Rational(0);
            if (PQ(a, c) != expected) {
                out.push_back({"PQ=|X|I", {t.relations().at(a), t.relations().at(c)}, expected, PQ(a, c)});
            }
        }
    }
    if (Rational total = t.valencies().sum(); total != size) {
        out.push_back({"sum_valencies", {}, size, total});
    }
    if (Rational total = t.multiplicities().sum(); total != size) {
        out.push_back({"sum_multiplicities", {}, size, total});
    }
    const auto& dom = t.idempotents();
    for (const auto& a : dom) {
        for (const auto& b : dom) {
            if (Rational r = orthogonality_residual(t, a, b); !r.is_zero()) {
                out.push_back({"orthogonality", {a, b}, Rational(0), r});
            }
        }
    }
    return out;
}

namespace {

std::vector<Discrepancy> rule_failures(const Domain& dom, const Tensor3<Rational>& tensor, const RationalVector& weights,
                                       const std::string& prefix, bool require_nonnegative)
{
    std::vector<Discrepancy> out;
    const auto d = dom.size();
    if (tensor.extent() != d) {
        out.push_back({prefix + "_extent", {}, Rational(static_cast<long>(d)), Rational(static_cast<long>(tensor.extent()))});
        return out;
    }
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            Rational weighted = 0;
            for (std::size_t c = 0; c < d; ++c) {
                weighted += tensor(a, b, c) * weights(c);
                if (tensor(a, b, c) != tensor(b, a, c)) {
                    out.push_back({prefix + "_commutative", {dom.at(a), dom.at(b), dom.at(c)}, tensor(b, a, c),
                                   tensor(a, b, c)});
                }
                if (require_nonnegative && tensor(a, b, c).sign() < 0) {
                    out.push_back({prefix + "_nonnegative", {dom.at(a), dom.at(b), dom.at(c)}, Rational(0),
                                   tensor(a, b, c)});
                }
            }
            const Rational expected = weights(a) * weights(b);
            if (weighted != expected) {
                out.push_back({prefix + "_weighted_sum", {dom.at(a), dom.at(b)}, expected, weighted});
            }
        }
    }
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t c = 0; c < d; ++c) {
            Rational total = 0;
            for (std::size_t b = 0; b < d; ++b) {
                total += tensor(a, b, c);
            }
            if (total != weights(a)) {
                out.push_back({prefix + "_row_sum", {dom.at(a), dom.at(c)}, weights(a), total});
            }
        }
    }
    return out;
}

} // namespace

std::vector<Discrepancy> krein_rule_failures(const SpectralTable& t, const KreinTensor& krein)
{
    return rule_failures(t.idempotents(), krein, t.multiplicities(), "krein", true);
}

std::vector<Discrepancy> intersection_rule_failures(const SpectralTable& t, const IntersectionTensor& inter)
{
    return rule_failures(t.relations(), inter, t.valencies(), "intersection", true);
}

} // namespace atlas
