#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "scheme_atlas/rational.hpp"

namespace atlas {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using IntMatrix = Matrix<long>;

/// Dense cube of scalars indexed (a, b, c), each index in [0, extent).
template <typename Scalar>
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t extent, const Scalar& fill = Scalar(0))
        : extent_(extent), data_(extent * extent * extent, fill)
    {
    }

    [[nodiscard]] std::size_t extent() const { return extent_; }

    Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[offset(a, b, c)]; }
    const Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) const { return data_[offset(a, b, c)]; }

    friend bool operator==(const Tensor3& x, const Tensor3& y) = default;

private:
    [[nodiscard]] std::size_t offset(std::size_t a, std::size_t b, std::size_t c) const
    {
        if (a >= extent_ || b >= extent_ || c >= extent_) {
            throw std::out_of_range("Tensor3 index out of range");
        }
        return (a * extent_ + b) * extent_ + c;
    }

    std::size_t extent_ = 0;
    std::vector<Scalar> data_;
};

/// Entries (a, b, c) of a Krein tensor hold q^c_{ab}.
using KreinTensor = Tensor3<Rational>;
/// Entries (a, b, c) of an intersection tensor hold p^c_{ab}.
using IntersectionTensor = Tensor3<Rational>;

template <typename Derived>
[[nodiscard]] bool is_exactly_zero(const Eigen::MatrixBase<Derived>& m)
{
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (m(r, c) != typename Derived::Scalar(0)) {
                return false;
            }
        }
    }
    return true;
}

/// Rank by Gaussian elimination over an exact field scalar.
template <typename Scalar>
[[nodiscard]] Eigen::Index exact_rank(Matrix<Scalar> m)
{
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
        Eigen::Index pivot = rank;
        while (pivot < m.rows() && m(pivot, col) == Scalar(0)) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        m.row(rank).swap(m.row(pivot));
        for (Eigen::Index r = rank + 1; r < m.rows(); ++r) {
            if (m(r, col) != Scalar(0)) {
                const Scalar factor = m(r, col) / m(rank, col);
                m.row(r) -= factor * m.row(rank);
            }
        }
        ++rank;
    }
    return rank;
}

/// Integer matrix to rational matrix.
[[nodiscard]] RationalMatrix to_rational(const IntMatrix& m);

} // namespace atlas
