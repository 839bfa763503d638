#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "arctanpow/algebra/poly.hpp"
#include "arctanpow/algebra/rational.hpp"

namespace arctanpow {

/// Signed Stirling numbers of the first kind, rows grown on demand.
///
/// Convention: x(x-1)...(x-n+1) = sum_m S(n, m) x^m, so S(3, 2) = -3.
class Stirling1Table {
 public:
  Integer get(long n, long m) {
    if (n < 0 || m < 0) throw DomainError("Stirling indices must be nonnegative");
    if (m > n) return Integer(0);
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < rows_.size()) return rows_[n][m];
    }
    std::unique_lock lock(mutex_);
    if (rows_.empty()) rows_.push_back({Integer(1)});
    while (rows_.size() <= static_cast<std::size_t>(n)) {
      const auto& prev = rows_.back();
      const long r = static_cast<long>(rows_.size()) - 1;  // building row r + 1
      std::vector<Integer> next(prev.size() + 1);
      for (std::size_t j = 0; j < next.size(); ++j) {
        Integer v(0);
        if (j >= 1) v += prev[j - 1];
        if (j < prev.size()) v -= Integer(r) * prev[j];
        next[j] = v;
      }
      rows_.push_back(std::move(next));
    }
    return rows_[n][m];
  }

  std::vector<Integer> row(long n) {
    std::vector<Integer> out;
    for (long m = 0; m <= n; ++m) out.push_back(get(n, m));
    return out;
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> rows_;
};

namespace detail {

inline Stirling1Table& shared_stirling_table() {
  static Stirling1Table table;
  return table;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// (a)_k = a (a+1) ... (a+k-1).
inline Rational rising(const Rational& a, long k) {
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= a + Rational(i);
  return r;
}

class LCache {
 public:
  std::optional<Rational> find(long m, long j) const {
    std::shared_lock lock(mutex_);
    auto it = cells_.find({m, j});
    if (it == cells_.end()) return std::nullopt;
    return it->second;
  }
  void store(long m, long j, const Rational& v) {
    std::unique_lock lock(mutex_);
    cells_.emplace(std::make_pair(m, j), v);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<long, long>, Rational> cells_;
};

inline LCache& shared_l_cache() {
  static LCache cache;
  return cache;
}

}  // namespace detail

inline Integer stirling1(long n, long m) { return detail::shared_stirling_table().get(n, m); }

/// sum_{l=0..m} (l-1)^j / (l! (m-l)!), with (l-1)^j = 1 at l = 1, j = 0.
inline Rational L_coeff(long m, long j) {
  if (m < 0 || j < 0) throw DomainError("L coefficient indices must be nonnegative");
  if (auto hit = detail::shared_l_cache().find(m, j)) return *hit;
  Rational sum(0);
  for (long l = 0; l <= m; ++l) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), Integer(l - 1).get_mpz_t(), static_cast<unsigned long>(j));
    if (power == 0) continue;
    sum += make_rational(power, factorial(l) * factorial(m - l));
  }
  detail::shared_l_cache().store(m, j, sum);
  return sum;
}

/// Coefficient of C^n in the real-variable Lemma polynomial, by the
/// Stirling/L contraction:
///   p(n, m) = sum_{j=0..m-n} binom(j+n-1, j) L(m, j) S(m-1, j+n-1).
/// Zero when n > m.
inline Rational p_closed(long n, long m) {
  if (n < 1 || m < 1) throw DomainError("p_closed requires n >= 1 and m >= 1");
  if (n > m) return Rational(0);
  Rational sum(0);
  for (long j = 0; j <= m - n; ++j) {
    Integer s = stirling1(m - 1, j + n - 1);
    if (s == 0) continue;
    Integer b = detail::binomial(static_cast<unsigned long>(j + n - 1), static_cast<unsigned long>(j));
    sum += Rational(b * s) * L_coeff(m, j);
  }
  return sum;
}

/// y * sum_{l=0..m} (1+y-l)_{m-1} / ((m-l)! l!), the Lemma's left side after
/// substituting c = 2iy and dividing out i^m.
inline Poly lemma_lhs_poly(long m) {
  if (m < 1) throw DomainError("Lemma polynomial needs m >= 1");
  Poly sum;
  for (long l = 0; l <= m; ++l) {
    Poly term = poly_pochhammer(Rational(1 - l), static_cast<std::size_t>(m - 1));
    term *= make_rational(Integer(1), factorial(m - l) * factorial(l));
    sum += term;
  }
  return sum * Poly::indeterminate();
}

/// Coefficients of y^{m-2l}, l = 0..floor(m/2), read off lemma_lhs_poly(m).
/// Throws ParityViolation if any y^{m-2l-1} coefficient is nonzero.
inline std::vector<Rational> p_from_poly(long m) {
  Poly lhs = lemma_lhs_poly(m);
  for (long power = 0; power <= lhs.degree(); ++power) {
    if ((m - power) % 2 != 0 && lhs.coefficient(power) != 0) {
      throw ParityViolation("Lemma polynomial for m=" + std::to_string(m) + " has nonzero y^" +
                            std::to_string(power) + " coefficient " +
                            to_string(lhs.coefficient(power)));
    }
  }
  std::vector<Rational> out;
  for (long l = 0; l <= m / 2; ++l) out.push_back(lhs.coefficient(static_cast<std::size_t>(m - 2 * l)));
  return out;
}

/// x^m coefficient of ((1+x)/(1-x))^y as the terminating hypergeometric sum
///   (y)_m / m! * sum_{k=0..m} (-m)_k (-y)_k / ((1-m-y)_k k!) (-1)^k.
inline Rational g_coeff(long m, const Rational& y) {
  if (m < 0) throw DomainError("g coefficient index must be nonnegative");
  const Rational lower = Rational(1 - m) - y;
  Rational sum(0);
  for (long k = 0; k <= m; ++k) {
    Rational den = detail::rising(lower, k);
    if (den == 0) {
      throw PoleError("g_coeff(" + std::to_string(m) + ", " + to_string(y) +
                      "): Pochhammer denominator vanishes at depth " + std::to_string(k));
    }
    Rational num = detail::rising(Rational(-m), k) * detail::rising(-y, k);
    if (num == 0) continue;
    sum += num / (den * Rational(factorial(k))) * Rational(sign_power(k));
  }
  return detail::rising(y, m) / Rational(factorial(m)) * sum;
}

}  // namespace arctanpow
