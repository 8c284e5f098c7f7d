#pragma once

#include <string_view>

#include "scheme_atlas/rational.hpp"

namespace atlas {

/// C(n, k); zero when k < 0, k > n or n < 0.
[[nodiscard]] Integer binomial(long n, long k);

/// q^e for e >= 0.
[[nodiscard]] Integer int_pow(long q, long e);

/// q^e for any integer e.
[[nodiscard]] Rational rational_pow(long q, long e);

/// [k] = (q^k - 1)/(q - 1). Throws std::domain_error for k < 0 or q < 2.
[[nodiscard]] Integer q_number(long k, long q);

/// [k] for any integer k, e.g. [-1] = -1/q.
[[nodiscard]] Rational q_number_signed(long k, long q);

/// Gaussian binomial; zero when m < 0 or m > n.
[[nodiscard]] Integer q_binomial(long n, long m, long q);

/// prod_{u=0}^{i-1} (q^i - q^u); appears in the count of rank-i matrices.
[[nodiscard]] Integer q_falling_product(long i, long q);

/// Identities between q-numbers and Gaussian binomials, written with
/// (first, second) = (a, b) for the first and (N, r) for the rest:
///   difference:      [a] - [b] = q^b [a-b],                      1 <= b < a
///   lower_step:      C(N,r) = [N-r+1]/[r] C(N,r-1),              1 <= r <= N
///   absorb_both:     C(N,r) = [N]/[r] C(N-1,r-1),                1 <= r <= N
///   absorb_top:      C(N,r) = [N]/[N-r] C(N-1,r),                1 <= r < N
///   adjacent_gap:    C(N,r) - C(N,r-1) = q^r [N-2r+1]/[N-r+1] C(N,r), 1 <= r <= N
enum class QIdentity { difference, lower_step, absorb_both, absorb_top, adjacent_gap };

[[nodiscard]] std::string_view to_string(QIdentity identity);

/// Left side minus right side. Throws std::invalid_argument outside the
/// ranges above.
[[nodiscard]] Rational q_identity_residual(QIdentity identity, long first, long second, long q);

} // namespace atlas
