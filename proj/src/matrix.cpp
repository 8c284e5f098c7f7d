#include "scheme_atlas/matrix.hpp"

namespace atlas {

RationalMatrix to_rational(const IntMatrix& m)
{
    RationalMatrix out(m.rows(), m.cols());
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            out(r, c) = Rational(m(r, c));
        }
    }
    return out;
}

} // namespace atlas
