#pragma once

#include <string>
#include <vector>

#include "arctanpow/algebra/digamma.hpp"
#include "arctanpow/algebra/rational.hpp"
#include "arctanpow/coeffs/coeff_table.hpp"
#include "arctanpow/combinatorics/combinatorics.hpp"

// The expansion coefficients t_k(n), with t_k(0) = 1, t_0(n) = 2^n/n! and
//   t_k(n) = sum_{m=0..k} t_m(n-1) / (m + n/2).
// Five independent routes compute them; every public entry point takes the
// (k, n) of that single-sum recursion.

namespace arctanpow {

namespace detail {

inline void require_cell(long k, long n) {
  if (k < 0 || n < 0) {
    throw DomainError("coefficient indices must be nonnegative, got (k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
  }
}

inline Rational nested_sum(long level, long upper) {
  if (level == 0) return Rational(1);
  Rational sum(0);
  for (long m = 0; m <= upper; ++m) sum += inverse_half_shift(m, level) * nested_sum(level - 1, m);
  return sum;
}

}  // namespace detail

/// Literal n-fold nested summation. Exponential cost; the oracle for small k, n.
inline Rational t_bruteforce(long k, long n) {
  detail::require_cell(k, n);
  return detail::nested_sum(n, k);
}

/// t_0(n) .. t_{k_max}(n) by the single-sum recursion, each cell an independent sum.
inline std::vector<Rational> t_recursive_row(long k_max, long n, CoeffTable& table) {
  detail::require_cell(k_max, n);
  std::vector<Rational> prev(static_cast<std::size_t>(k_max) + 1);
  for (long m = 0; m <= k_max; ++m) {
    auto hit = table.lookup({m, 0}, Method::Recursive);
    prev[m] = hit ? *hit : table.record({m, 0}, Method::Recursive, Rational(1));
  }
  for (long j = 1; j <= n; ++j) {
    std::vector<Rational> cur(prev.size());
    for (long m = 0; m <= k_max; ++m) {
      if (auto hit = table.lookup({m, j}, Method::Recursive)) {
        cur[m] = *hit;
        continue;
      }
      Rational sum(0);
      for (long i = 0; i <= m; ++i) sum += prev[i] * inverse_half_shift(i, j);
      cur[m] = table.record({m, j}, Method::Recursive, sum);
    }
    prev = std::move(cur);
  }
  return prev;
}

inline Rational t_recursive(long k, long n, CoeffTable& table) {
  detail::require_cell(k, n);
  if (auto hit = table.lookup({k, n}, Method::Recursive)) return *hit;
  return t_recursive_row(k, n, table).back();
}

/// Row n marched upward in k from t_0(n) = 2^n/n!:
///   t_{k+1}(n) = t_k(n) + t_{k+1}(n-1) / (k+1 + n/2).
/// O(k_max * n) rational operations, so this is the route used for long rows.
inline std::vector<Rational> t_update_row(long k_max, long n, CoeffTable& table) {
  detail::require_cell(k_max, n);
  auto cell = [&](long m, long j, auto&& compute) {
    if (auto hit = table.lookup({m, j}, Method::Update)) return *hit;
    return table.record({m, j}, Method::Update, compute());
  };
  std::vector<Rational> prev(static_cast<std::size_t>(k_max) + 1);
  for (long m = 0; m <= k_max; ++m) prev[m] = cell(m, 0, [] { return Rational(1); });
  for (long j = 1; j <= n; ++j) {
    std::vector<Rational> cur(prev.size());
    cur[0] = cell(0, j, [&] { return make_rational(pow2(j), factorial(j)); });
    for (long m = 0; m < k_max; ++m)
      cur[m + 1] = cell(m + 1, j, [&] { return Rational(cur[m] + prev[m + 1] * inverse_half_shift(m + 1, j)); });
    prev = std::move(cur);
  }
  return prev;
}

inline Rational t_update(long k, long n, CoeffTable& table) {
  detail::require_cell(k, n);
  if (auto hit = table.lookup({k, n}, Method::Update)) return *hit;
  return t_update_row(k, n, table).back();
}

/// Numerator of the five-term recursion at (k, n); t_k(n) is this divided by
/// 2k - n - 2. `t` supplies neighbours inside the triangle. Neighbours with a
/// negative index are zero. The only zero denominators pair with t_0(-1),
/// where the product is taken as the limit of c t_0(J)/(J+1) at J = -1 with
/// t_0(J) = 2^J / Gamma(J+1), which is c/2.
template <class Neighbor>
Rational fivepart_numerator(long k, long n, Neighbor&& t) {
  auto at = [&](long a, long b) -> Rational {
    if (a < 0 || b < 0) return Rational(0);
    return t(a, b);
  };
  auto weighted = [&](long c, long d, long a, long b) -> Rational {
    if (d != 0) return make_rational(c, d) * at(a, b);
    if (a == 0 && b == -1) return make_rational(c, 2);
    if (a >= 0 && b >= 0) throw std::logic_error("five-term recursion: unexpected zero denominator");
    return Rational(0);
  };
  Rational num = Rational(-2 * (n - 2 * k + 4)) * at(k - 1, n) + Rational(n - 2 * k + 6) * at(k - 2, n);
  num += weighted(-4 * (n + 1), 2 * k + n, k, n - 1);
  num += weighted(4 * (n + 2), 2 * k + n - 2, k - 1, n - 1);
  num += weighted(4, 2 * k + n - 1, k, n - 2);
  return num;
}

inline bool fivepart_degenerate(long k, long n) { return 2 * k - n - 2 == 0; }

namespace detail {

inline Rational fivepart_cell(long k, long n, CoeffTable& table) {
  if (fivepart_degenerate(k, n)) return t_recursive(k, n, table);
  if (auto hit = table.lookup({k, n}, Method::FivePart)) return *hit;
  Rational num = fivepart_numerator(k, n, [&](long a, long b) { return fivepart_cell(a, b, table); });
  return table.record({k, n}, Method::FivePart, num / Rational(2 * k - n - 2));
}

}  // namespace detail

/// Five-term recursion in both indices. Cells on the degenerate line
/// 2k = n + 2 that it needs as neighbours come from t_recursive; asking for a
/// degenerate cell directly throws DegenerateRecursion.
inline Rational t_fivepart(long k, long n, CoeffTable& table) {
  detail::require_cell(k, n);
  if (fivepart_degenerate(k, n)) throw DegenerateRecursion(k, n);
  return detail::fivepart_cell(k, n, table);
}

/// Closed form through the Stirling/L coefficients: with m = (n+1) + 2k,
/// t_k(n) = (m/2) p_closed(n+1, m).
inline Rational t_closed(long k, long n) {
  detail::require_cell(k, n);
  const long m = n + 1 + 2 * k;
  return make_rational(m, 2) * p_closed(n + 1, m);
}

/// Orders 1 and 2 through digamma values at half-integers:
///   t_k(1) = psi(k + 3/2) - psi(1/2),
///   t_k(2) = sum_{j=0..k} (psi(j + 3/2) - psi(1/2)) / (j + 1).
/// The gamma and ln 2 parts must cancel; BasisOverflow otherwise.
inline Rational t_digamma_form(long k, int order) {
  if (k < 0) throw DomainError("coefficient index must be nonnegative");
  const DigammaExpr base = digamma_at_half_integer(0);
  if (order == 1) return (digamma_at_half_integer(k + 1) - base).to_rational();
  if (order == 2) {
    DigammaExpr sum{};
    for (long j = 0; j <= k; ++j) sum += (digamma_at_half_integer(j + 1) - base) * make_rational(1, j + 1);
    return sum.to_rational();
  }
  throw DomainError("digamma form exists only for orders 1 and 2");
}

/// t_k(n) as a total function: zero for negative indices, otherwise the
/// memoized single-sum recursion. This is what the verifiers consume.
inline Rational coefficient(long k, long n, CoeffTable& table) {
  if (k < 0 || n < 0) return Rational(0);
  return t_recursive(k, n, table);
}

struct RouteSet {
  bool bruteforce = false;
  bool recursive = true;
  bool update = true;
  bool fivepart = true;
  bool closed = true;
};

/// Computes every cell with k <= k_max, n <= n_max by each selected route and
/// records all of them in the table. Any disagreement throws CoeffClash.
inline void fill_triangle(long k_max, long n_max, CoeffTable& table, RouteSet routes = {}) {
  for (long n = 0; n <= n_max; ++n) {
    if (routes.recursive) t_recursive_row(k_max, n, table);
    if (routes.update) t_update_row(k_max, n, table);
    for (long k = 0; k <= k_max; ++k) {
      if (routes.fivepart && !fivepart_degenerate(k, n)) t_fivepart(k, n, table);
      if (routes.closed) table.record({k, n}, Method::Closed, t_closed(k, n));
      if (routes.bruteforce) table.record({k, n}, Method::BruteForce, t_bruteforce(k, n));
    }
  }
}

}  // namespace arctanpow
