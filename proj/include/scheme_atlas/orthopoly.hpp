#pragma once

#include <string_view>
#include <vector>

#include "scheme_atlas/rational.hpp"

namespace atlas {

// Every evaluator returns 0 when the index or the argument lies outside the
// family's range and throws std::invalid_argument on bad parameters.
// Results are memoized per thread.

/// K_i(n,q;j), range {0..n}. Requires n >= 0, q >= 2.
[[nodiscard]] Rational krawtchouk(int i, int n, int q, int j);

/// E_i(n,k;j) (dual Hahn), range {0..min(k,n-k)}. Requires 0 <= k <= n.
[[nodiscard]] Rational eberlein(int i, int n, int k, int j);

/// H_i(n,k;j), range {0..min(k,n-k)}. Requires 0 <= k <= n.
[[nodiscard]] Rational hahn(int i, int n, int k, int j);

/// K_i(n,l;q;j), range {0..min(n,l)}. Requires n, l >= 0, q >= 2.
[[nodiscard]] Rational gen_krawtchouk(int i, int n, int l, int q, int j);

/// E_i(n,m;q;j), range {0..min(m,n-m)}. Requires 0 <= m <= n, q >= 2.
[[nodiscard]] Rational gen_eberlein(int i, int n, int m, int q, int j);

/// Q_i(n,m;q;j), range {0..min(m,n-m)}. Requires 0 <= m <= n, q >= 2.
[[nodiscard]] Rational q_hahn(int i, int n, int m, int q, int j);

/// q[n][n-1] / ([n-m][m]), the leading coefficient of Q_1.
[[nodiscard]] Rational h_star(int n, int m, int q);

enum class PolyFamily { krawtchouk, eberlein, hahn, gen_krawtchouk, gen_eberlein, q_hahn };

[[nodiscard]] std::string_view to_string(PolyFamily family);

/// One evaluation. Parameter order: krawtchouk {n,q}; eberlein, hahn {n,k};
/// gen_krawtchouk {n,l,q}; gen_eberlein, q_hahn {n,m,q}.
struct PolyEval {
    PolyFamily family;
    std::vector<int> params;
    int index = 0;
    int argument = 0;
    Rational value;
};

[[nodiscard]] PolyEval evaluate(PolyFamily family, const std::vector<int>& params, int index, int argument);

/// Largest index/argument of the family for the given parameters.
[[nodiscard]] int degree_bound(PolyFamily family, const std::vector<int>& params);

// Residuals below are identically zero when the identities hold. Arguments
// outside the admissible range throw std::invalid_argument.

/// Splitting recurrence of H_r(N,p;x) into J(N-1,p-1) Hahn values.
/// Requires 0 < p < N, 0 <= x <= min(p-1, N-p), 0 <= r <= min(p, N-p).
[[nodiscard]] Rational hahn_recurrence_residual(int N, int p, int r, int x);

/// q-analog of the above for Q_r(N,p;q;x).
[[nodiscard]] Rational q_hahn_recurrence_residual(int N, int p, int q, int r, int x);

/// H_1(n,k;y) rewritten through H_1(n-i,k-i;y).
/// Requires 0 <= i < k < n, n - i >= 2, 0 <= y <= min(k-i, n-k).
[[nodiscard]] Rational hahn_degree_one_shift_residual(int n, int k, int i, int y);

/// Q_1(n,m;q;y) rewritten through Q_1(n-i,m-i;q;y).
/// Requires 0 <= i < m < n, 0 <= y <= min(m-i, n-m).
[[nodiscard]] Rational q_hahn_degree_one_shift_residual(int n, int m, int q, int i, int y);

/// Drops every memoized value held by the calling thread.
void clear_polynomial_cache();

} // namespace atlas
