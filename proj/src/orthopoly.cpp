#include "scheme_atlas/orthopoly.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "scheme_atlas/qarith.hpp"

namespace atlas {

namespace {

using Key = std::array<int, 7>;

struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (int v : key) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
            h *= 1099511628211ull;
        }
        return h;
    }
};

using Cache = std::unordered_map<Key, Rational, KeyHash>;

Cache& cache()
{
    thread_local Cache instance;
    return instance;
}

template <typename Fn>
Rational memoized(const Key& key, Fn&& compute)
{
    auto& memo = cache();
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    Rational value = compute();
    memo.emplace(key, value);
    return value;
}

void require(bool condition, const char* what)
{
    if (!condition) {
        throw std::invalid_argument(what);
    }
}

bool in_range(int x, int bound) { return x >= 0 && x <= bound; }

Rational qnum(int k, int q) { return q_number_signed(k, q); }

} // namespace

void clear_polynomial_cache() { cache().clear(); }

Rational krawtchouk(int i, int n, int q, int j)
{
    require(n >= 0 && q >= 2, "krawtchouk: requires n >= 0, q >= 2");
    if (!in_range(i, n) || !in_range(j, n)) {
        return 0;
    }
    return memoized({0, i, n, q, j, 0, 0}, [&] {
        Integer sum = 0;
        for (int u = 0; u <= i; ++u) {
            Integer term = int_pow(q - 1, i - u) * binomial(j, u) * binomial(n - j, i - u);
            sum += (u % 2 == 0) ? term : Integer(-term);
        }
        return Rational(sum);
    });
}

Rational eberlein(int i, int n, int k, int j)
{
    require(0 <= k && k <= n, "eberlein: requires 0 <= k <= n");
    const int d = std::min(k, n - k);
    if (!in_range(i, d) || !in_range(j, d)) {
        return 0;
    }
    return memoized({1, i, n, k, j, 0, 0}, [&] {
        Integer sum = 0;
        for (int u = 0; u <= i; ++u) {
            Integer term = binomial(j, u) * binomial(k - j, i - u) * binomial(n - k - j, i - u);
            sum += (u % 2 == 0) ? term : Integer(-term);
        }
        return Rational(sum);
    });
}

Rational hahn(int i, int n, int k, int j)
{
    require(0 <= k && k <= n, "hahn: requires 0 <= k <= n");
    const int d = std::min(k, n - k);
    if (!in_range(i, d) || !in_range(j, d)) {
        return 0;
    }
    return memoized({2, i, n, k, j, 0, 0}, [&] {
        const Rational multiplicity(binomial(n, i) - binomial(n, i - 1));
        const Rational valency(binomial(k, j) * binomial(n - k, j));
        return multiplicity / valency * eberlein(j, n, k, i);
    });
}

Rational gen_krawtchouk(int i, int n, int l, int q, int j)
{
    require(n >= 0 && l >= 0 && q >= 2, "gen_krawtchouk: requires n, l >= 0, q >= 2");
    const int d = std::min(n, l);
    if (!in_range(i, d) || !in_range(j, d)) {
        return 0;
    }
    return memoized({3, i, n, l, q, j, 0}, [&] {
        Integer sum = 0;
        for (int u = 0; u <= i; ++u) {
            const long e = static_cast<long>(u) * l + (i - u) * (i - u - 1) / 2;
            Integer term = int_pow(q, e) * q_binomial(n - u, n - i, q) * q_binomial(n - j, u, q);
            sum += ((i - u) % 2 == 0) ? term : Integer(-term);
        }
        return Rational(sum);
    });
}

Rational gen_eberlein(int i, int n, int m, int q, int j)
{
    require(0 <= m && m <= n && q >= 2, "gen_eberlein: requires 0 <= m <= n, q >= 2");
    const int d = std::min(m, n - m);
    if (!in_range(i, d) || !in_range(j, d)) {
        return 0;
    }
    return memoized({4, i, n, m, q, j, 0}, [&] {
        Integer sum = 0;
        for (int u = 0; u <= i; ++u) {
            const long e = static_cast<long>(u) * j + (i - u) * (i - u - 1) / 2;
            Integer term = int_pow(q, e) * q_binomial(m - u, m - i, q) * q_binomial(m - j, u, q)
                * q_binomial(n - m + u - j, u, q);
            sum += ((i - u) % 2 == 0) ? term : Integer(-term);
        }
        return Rational(sum);
    });
}

Rational q_hahn(int i, int n, int m, int q, int j)
{
    require(0 <= m && m <= n && q >= 2, "q_hahn: requires 0 <= m <= n, q >= 2");
    const int d = std::min(m, n - m);
    if (!in_range(i, d) || !in_range(j, d)) {
        return 0;
    }
    return memoized({5, i, n, m, q, j, 0}, [&] {
        const Rational multiplicity(q_binomial(n, i, q) - q_binomial(n, i - 1, q));
        const Rational valency(int_pow(q, static_cast<long>(j) * j) * q_binomial(n - m, j, q) * q_binomial(m, j, q));
        return multiplicity / valency * gen_eberlein(j, n, m, q, i);
    });
}

Rational h_star(int n, int m, int q)
{
    return Rational(q) * qnum(n, q) * qnum(n - 1, q) / (qnum(n - m, q) * qnum(m, q));
}

std::string_view to_string(PolyFamily family)
{
    switch (family) {
    case PolyFamily::krawtchouk: return "krawtchouk";
    case PolyFamily::eberlein: return "eberlein";
    case PolyFamily::hahn: return "hahn";
    case PolyFamily::gen_krawtchouk: return "gen_krawtchouk";
    case PolyFamily::gen_eberlein: return "gen_eberlein";
    case PolyFamily::q_hahn: return "q_hahn";
    }
    return "unknown";
}

namespace {

void require_arity(PolyFamily family, const std::vector<int>& params)
{
    const std::size_t expected =
        (family == PolyFamily::krawtchouk || family == PolyFamily::eberlein || family == PolyFamily::hahn) ? 2 : 3;
    if (params.size() != expected) {
        throw std::invalid_argument(std::string(to_string(family)) + ": expected " + std::to_string(expected)
                                    + " parameters");
    }
}

} // namespace

int degree_bound(PolyFamily family, const std::vector<int>& params)
{
    require_arity(family, params);
    switch (family) {
    case PolyFamily::krawtchouk: return params[0];
    case PolyFamily::gen_krawtchouk: return std::min(params[0], params[1]);
    default: return std::min(params[1], params[0] - params[1]);
    }
}

PolyEval evaluate(PolyFamily family, const std::vector<int>& params, int index, int argument)
{
    require_arity(family, params);
    PolyEval out{family, params, index, argument, Rational(0)};
    const auto& p = params;
    switch (family) {
    case PolyFamily::krawtchouk: out.value = krawtchouk(index, p[0], p[1], argument); break;
    case PolyFamily::eberlein: out.value = eberlein(index, p[0], p[1], argument); break;
    case PolyFamily::hahn: out.value = hahn(index, p[0], p[1], argument); break;
    case PolyFamily::gen_krawtchouk: out.value = gen_krawtchouk(index, p[0], p[1], p[2], argument); break;
    case PolyFamily::gen_eberlein: out.value = gen_eberlein(index, p[0], p[1], p[2], argument); break;
    case PolyFamily::q_hahn: out.value = q_hahn(index, p[0], p[1], p[2], argument); break;
    }
    return out;
}

namespace {

void require_recurrence_range(int N, int p, int r, int x)
{
    require(0 < p && p < N, "recurrence: requires 0 < p < N");
    require(in_range(x, std::min(p - 1, N - p)), "recurrence: x outside 0..min(p-1, N-p)");
    require(in_range(r, std::min(p, N - p)), "recurrence: r outside 0..min(p, N-p)");
}

} // namespace

Rational hahn_recurrence_residual(int N, int p, int r, int x)
{
    require_recurrence_range(N, p, r, x);
    const Rational same = quotient_or_zero(p - r, N - 2 * r) * hahn(r, N - 1, p - 1, x);
    const Rational lower = quotient_or_zero(N - p - r + 1, N - 2 * r + 2) * hahn(r - 1, N - 1, p - 1, x);
    return hahn(r, N, p, x) - Rational(N) / Rational(p) * (same + lower);
}

Rational q_hahn_recurrence_residual(int N, int p, int q, int r, int x)
{
    require(q >= 2, "q_hahn_recurrence_residual: requires q >= 2");
    require_recurrence_range(N, p, r, x);
    const Rational same = quotient_or_zero(qnum(p - r, q), qnum(N - 2 * r, q)) * q_hahn(r, N - 1, p - 1, q, x);
    const Rational lower = quotient_or_zero(rational_pow(q, p - r + 1) * qnum(N - p - r + 1, q), qnum(N - 2 * r + 2, q))
        * q_hahn(r - 1, N - 1, p - 1, q, x);
    return q_hahn(r, N, p, q, x) - qnum(N, q) / qnum(p, q) * (same + lower);
}

Rational hahn_degree_one_shift_residual(int n, int k, int i, int y)
{
    require(0 < k && k < n, "hahn_degree_one_shift_residual: requires 0 < k < n");
    require(0 <= i && i < k, "hahn_degree_one_shift_residual: requires 0 <= i < k");
    require(n - i >= 2, "hahn_degree_one_shift_residual: requires n - i >= 2");
    require(in_range(y, std::min(k - i, n - k)), "hahn_degree_one_shift_residual: y outside 0..min(k-i, n-k)");
    const Rational shifted = Rational(i * (n - k)) / Rational(n - i)
        + Rational(n * (k - i)) / Rational((n - i - 1) * (n - i)) * hahn(1, n - i, k - i, y);
    return hahn(1, n, k, y) - Rational(n - 1) / Rational(k) * shifted;
}

Rational q_hahn_degree_one_shift_residual(int n, int m, int q, int i, int y)
{
    require(q >= 2, "q_hahn_degree_one_shift_residual: requires q >= 2");
    require(0 < m && m < n, "q_hahn_degree_one_shift_residual: requires 0 < m < n");
    require(0 <= i && i < m, "q_hahn_degree_one_shift_residual: requires 0 <= i < m");
    require(in_range(y, std::min(m - i, n - m)), "q_hahn_degree_one_shift_residual: y outside 0..min(m-i, n-m)");
    const Rational shifted = q_hahn(1, n - i, m - i, q, y) / h_star(n - i, m - i, q)
        + qnum(n - m, q) * qnum(m, q) / qnum(n, q) - qnum(n - m, q) * qnum(m - i, q) / qnum(n - i, q);
    return q_hahn(1, n, m, q, y) - h_star(n, m, q) * shifted;
}

} // namespace atlas
