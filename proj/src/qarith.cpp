#include "scheme_atlas/qarith.hpp"

#include <stdexcept>
#include <string>

namespace atlas {

namespace {

void require_base(long q)
{
    if (q < 2) {
        throw std::domain_error("q-analog base must be >= 2");
    }
}

} // namespace

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

Integer int_pow(long q, long e)
{
    if (e < 0) {
        throw std::domain_error("int_pow: negative exponent");
    }
    Integer result;
    mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(q < 0 ? -q : q), static_cast<unsigned long>(e));
    if (q < 0 && e % 2 == 1) {
        result = -result;
    }
    return result;
}

Rational rational_pow(long q, long e)
{
    if (e >= 0) {
        return Rational(int_pow(q, e));
    }
    return Rational(Integer(1), int_pow(q, -e));
}

Integer q_number(long k, long q)
{
    require_base(q);
    if (k < 0) {
        throw std::domain_error("q_number: negative k (use q_number_signed)");
    }
    return (int_pow(q, k) - 1) / (q - 1);
}

Rational q_number_signed(long k, long q)
{
    require_base(q);
    if (k >= 0) {
        return Rational(q_number(k, q));
    }
    return (rational_pow(q, k) - 1) / Rational(q - 1);
}

Integer q_binomial(long n, long m, long q)
{
    require_base(q);
    if (n < 0 || m < 0 || m > n) {
        return 0;
    }
    if (m > n - m) {
        m = n - m;
    }
    Integer num = 1;
    Integer den = 1;
    for (long i = 0; i < m; ++i) {
        num *= q_number(n - i, q);
        den *= q_number(m - i, q);
    }
    return num / den;
}

Integer q_falling_product(long i, long q)
{
    Integer result = 1;
    const Integer top = int_pow(q, i);
    for (long u = 0; u < i; ++u) {
        result *= top - int_pow(q, u);
    }
    return result;
}

std::string_view to_string(QIdentity identity)
{
    switch (identity) {
    case QIdentity::difference: return "difference";
    case QIdentity::lower_step: return "lower_step";
    case QIdentity::absorb_both: return "absorb_both";
    case QIdentity::absorb_top: return "absorb_top";
    case QIdentity::adjacent_gap: return "adjacent_gap";
    }
    return "unknown";
}

Rational q_identity_residual(QIdentity identity, long first, long second, long q)
{
    require_base(q);
    auto qn = [q](long k) { return q_number_signed(k, q); };
    auto qb = [q](long n, long m) { return Rational(q_binomial(n, m, q)); };
    if (identity == QIdentity::difference) {
        const long a = first;
        const long b = second;
        if (b < 1 || b >= a) {
            throw std::invalid_argument("q_identity_residual: difference needs 1 <= b < a");
        }
        return qn(a) - qn(b) - rational_pow(q, b) * qn(a - b);
    }
    const long N = first;
    const long r = second;
    const long top = identity == QIdentity::absorb_top ? N - 1 : N;
    if (r < 1 || r > top) {
        throw std::invalid_argument("q_identity_residual: r out of range for " + std::string(to_string(identity)));
    }
    switch (identity) {
    case QIdentity::lower_step: return qb(N, r) - qn(N - r + 1) / qn(r) * qb(N, r - 1);
    case QIdentity::absorb_both: return qb(N, r) - qn(N) / qn(r) * qb(N - 1, r - 1);
    case QIdentity::absorb_top: return qb(N, r) - qn(N) / qn(N - r) * qb(N - 1, r);
    case QIdentity::adjacent_gap:
        return qb(N, r) - qb(N, r - 1) - rational_pow(q, r) * qn(N - 2 * r + 1) / qn(N - r + 1) * qb(N, r);
    case QIdentity::difference: break;
    }
    throw std::invalid_argument("q_identity_residual: unknown identity");
}

} // namespace atlas
