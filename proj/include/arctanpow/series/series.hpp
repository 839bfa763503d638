#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "arctanpow/algebra/bigfloat.hpp"
#include "arctanpow/algebra/rational.hpp"
#include "arctanpow/coeffs/coeffs.hpp"
#include "arctanpow/series/formal_series.hpp"

// Evaluation of
//   (arctan(x)/x)^n = n!/2^n * sum_m (-x^2)^m t_m(n-1) / (m + n/2),   |x| < 1,
// together with the formal and numeric oracles it is checked against.

namespace arctanpow {

// ---------------------------------------------------------------------------
// Formal series

/// arctan(x)/x: coefficient of x^{2m} is (-1)^m / (2m+1), odd ones zero.
inline FormalSeries arctan_series(std::size_t order) {
  FormalSeries s(order);
  for (std::size_t j = 0; j <= order; j += 2) {
    const long m = static_cast<long>(j / 2);
    s[j] = make_rational(sign_power(m), 2 * m + 1);
  }
  return s;
}

/// sum_m x^m / (m + 1/2).
inline FormalSeries half_shift_series(std::size_t order) {
  FormalSeries s(order);
  for (std::size_t m = 0; m <= order; ++m) s[m] = inverse_half_shift(static_cast<long>(m), 1);
  return s;
}

/// (arctan(x)/x)^n by repeated exact Cauchy products.
inline FormalSeries cauchy_power_oracle(long n, std::size_t order) {
  if (n < 1) throw DomainError("power must be >= 1");
  return arctan_series(order).pow(static_cast<unsigned>(n));
}

/// (arctan(x)/x)^n assembled from the t coefficients.
inline FormalSeries expansion_series(long n, std::size_t order, CoeffTable& table) {
  if (n < 1) throw DomainError("power must be >= 1");
  FormalSeries s(order);
  const long m_max = static_cast<long>(order / 2);
  const std::vector<Rational> row = t_recursive_row(m_max, n - 1, table);
  const Rational scale = make_rational(factorial(n), pow2(n));
  for (long m = 0; m <= m_max; ++m)
    s[2 * m] = scale * Rational(sign_power(m)) * row[m] * inverse_half_shift(m, n);
  return s;
}

/// n! sum_M x^M t_M(n-1) / (M + n/2): the unsigned form, equal to the
/// n-th power of half_shift_series.
inline FormalSeries unsigned_expansion_series(long n, std::size_t order, CoeffTable& table) {
  if (n < 1) throw DomainError("power must be >= 1");
  FormalSeries s(order);
  const std::vector<Rational> row = t_recursive_row(static_cast<long>(order), n - 1, table);
  const Rational scale(factorial(n));
  for (std::size_t m = 0; m <= order; ++m) s[m] = scale * row[m] * inverse_half_shift(static_cast<long>(m), n);
  return s;
}

/// ((1+x)/(1-x))^y. Integer y >= 0 uses Cauchy products; anything else the
/// rational-power recurrence.
inline FormalSeries cayley_power_series(const Rational& y, std::size_t order) {
  FormalSeries base(order);
  base[0] = 1;
  for (std::size_t j = 1; j <= order; ++j) base[j] = 2;
  if (y.get_den() == 1 && y >= 0 && y <= 4096) return base.pow(static_cast<unsigned>(y.get_num().get_ui()));
  return base.pow(y);
}

// ---------------------------------------------------------------------------
// Numeric evaluation

struct EvalResult {
  BigFloat value;
  long terms_used = 0;
  BigFloat tail_bound;
  // True when tail_bound is an estimate rather than a bound (Euler transform,
  // or an alternating remainder without observed monotone decay).
  bool heuristic_bound = false;
};

/// Allowance for accumulated rounding at a given precision: 2^-(P - 56),
/// which is 2^-200 at the default 256 bits.
inline BigFloat rounding_slack(long precision_bits) {
  return BigFloat::power_of_two(-(precision_bits - 56), precision_bits);
}

/// (arctan(x)/x)^n directly at the precision of x; 1 at x = 0. n = 0 gives 1.
inline BigFloat direct_oracle(long n, const BigFloat& x) {
  if (n < 0) throw DomainError("power must be nonnegative");
  const long prec = x.precision();
  if (x.is_zero() || n == 0) return BigFloat(1, prec);
  return pow(atan(x) / x, static_cast<unsigned long>(n));
}

namespace detail {

inline BigFloat positive_infinity(long prec) {
  BigFloat r(prec);
  mpfr_set_inf(r.get(), 1);
  return r;
}

// Lazily extended row t_0(order) .. t_K(order) via the O(K n) update route.
class RowCache {
 public:
  RowCache(long order, long cap, CoeffTable& table) : order_(order), cap_(cap), table_(table) {}

  const Rational& at(long m) {
    if (m >= static_cast<long>(row_.size())) {
      long want = std::max<long>(64, 2 * static_cast<long>(row_.size()));
      want = std::min(std::max(want, m + 1), cap_ + 1);
      row_ = t_update_row(want - 1, order_, table_);
    }
    return row_[m];
  }

 private:
  long order_;
  long cap_;
  CoeffTable& table_;
  std::vector<Rational> row_;
};

}  // namespace detail

/// Partial sum of the expansion at |x| < 1 with a truncation bound.
///
/// Summation stops at max_terms or once the next term is below 2^-(P+8) of
/// the running sum inside a run of decreasing terms. If the term magnitudes
/// decrease monotonically from some index up to the first omitted term, the
/// alternating-series remainder (that term's magnitude) is the bound.
/// Otherwise the tail is dominated by a geometric series using the largest
/// observed coefficient ratio.
inline EvalResult eval_expansion(long n, const BigFloat& x, long max_terms, CoeffTable& table) {
  if (n < 1) throw DomainError("power must be >= 1");
  if (max_terms < 1) throw DomainError("max_terms must be >= 1");
  const long prec = x.precision();
  const BigFloat one(1, prec);
  if (abs(x) >= one)
    throw DomainError("the expansion needs |x| < 1 (x = 1 is handled by the pi^n sum)");
  if (x.is_zero()) return EvalResult{one, 1, BigFloat(prec), false};

  const BigFloat x2 = x * x;
  const Rational scale = make_rational(factorial(n), pow2(n));
  const BigFloat threshold = BigFloat::power_of_two(-(prec + 8), prec);
  detail::RowCache row(n - 1, max_terms, table);

  BigFloat sum(prec);
  BigFloat power = one;
  BigFloat prev_mag(prec);
  BigFloat prev_coeff(prec);
  BigFloat max_ratio(prec);
  long monotone_from = 0;
  long m = 0;
  BigFloat mag(prec);
  for (;; ++m) {
    const BigFloat coeff(scale * row.at(m) * inverse_half_shift(m, n), prec);
    mag = coeff * power;
    if (m > 0) {
      if (mag >= prev_mag) monotone_from = m;
      max_ratio = std::max(max_ratio, coeff / prev_coeff);
    }
    if (m == max_terms) break;
    if (m > monotone_from && mag <= threshold * abs(sum)) break;
    sum = (m % 2 == 0) ? sum + mag : sum - mag;
    power = power * x2;
    prev_mag = mag;
    prev_coeff = coeff;
  }

  EvalResult result{sum, m, mag, false};
  if (m <= monotone_from) {
    const BigFloat q = max_ratio * x2;
    result.tail_bound = q < one ? mag / (one - q) : detail::positive_infinity(prec);
  }
  return result;
}

/// pi^n / (2^n n!), the value of the expansion's sum at x = 1.
inline BigFloat pi_power_reference(long n, long precision_bits = kDefaultPrecisionBits) {
  if (n < 1) throw DomainError("power must be >= 1");
  BigFloat r = pow(BigFloat::pi(precision_bits), static_cast<unsigned long>(n));
  return r / BigFloat(Rational(pow2(n) * factorial(n)), precision_bits);
}

/// sum_m (-1)^m t_m(n-1) / (m + n/2), the expansion at x = 1.
///
/// Plain mode returns the partial sum of max_terms terms with the alternating
/// remainder as bound. Accelerated mode sums a short prefix directly and
/// applies the Euler transform sum_k (-1)^k Delta^k a_j / 2^{k+1} to the rest
/// of the window; its error estimate is the last transformed term and is
/// flagged heuristic.
inline EvalResult pi_power_sum(long n, long max_terms, bool accelerate, CoeffTable& table,
                               long precision_bits = kDefaultPrecisionBits) {
  if (n < 1) throw DomainError("power must be >= 1");
  if (max_terms < 1) throw DomainError("max_terms must be >= 1");
  const long prec = precision_bits;
  const std::vector<Rational> row = t_update_row(max_terms, n - 1, table);
  auto term = [&](long m) { return Rational(row[m] * inverse_half_shift(m, n)); };

  if (!accelerate) {
    BigFloat sum(prec);
    bool monotone = true;
    Rational prev = term(0);
    for (long m = 0; m < max_terms; ++m) {
      const Rational a = term(m);
      if (m > 0 && a >= prev) monotone = false;
      prev = a;
      const BigFloat v(a, prec);
      sum = (m % 2 == 0) ? sum + v : sum - v;
    }
    const Rational next = term(max_terms);
    if (next >= prev) monotone = false;
    return EvalResult{sum, max_terms, BigFloat(next, prec), !monotone};
  }

  // Differences of length-L windows lose about L bits to cancellation.
  const long prefix = max_terms / 5;
  const long window = max_terms - prefix;
  const long wp = prec + window + 64;
  BigFloat head(wp);
  for (long m = 0; m < prefix; ++m) {
    const BigFloat v(term(m), wp);
    head = (m % 2 == 0) ? head + v : head - v;
  }
  std::vector<BigFloat> diff;
  diff.reserve(static_cast<std::size_t>(window));
  for (long m = prefix; m < max_terms; ++m) diff.emplace_back(term(m), wp);
  BigFloat tail(wp);
  BigFloat last(wp);
  for (long k = 0; !diff.empty(); ++k) {
    last = ldexp(diff.front(), -(k + 1));
    tail = (k % 2 == 0) ? tail + last : tail - last;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  const BigFloat value = (prefix % 2 == 0) ? head + tail : head - tail;
  return EvalResult{value.with_precision(prec), max_terms, abs(last).with_precision(prec), true};
}

/// The double sum
///   1 + sum_{n=1..order} (c x/2)^n sum_{m=0..order} (-x^2)^m t_m(n-1)/(m + n/2)
/// against exp(c arctan x) computed directly. The leading 1 is the n = 0 term.
inline std::pair<BigFloat, BigFloat> exp_arctan_check(const Rational& c, const BigFloat& x, long order,
                                                      CoeffTable& table) {
  if (order < 1) throw DomainError("order must be >= 1");
  const long prec = x.precision();
  const BigFloat one(1, prec);
  if (abs(x) >= one) throw DomainError("exp/arctan check needs |x| < 1");
  const BigFloat cf(c, prec);
  const BigFloat x2 = x * x;
  const BigFloat half_cx = ldexp(cf * x, -1);

  BigFloat total = one;
  BigFloat outer = one;
  for (long n = 1; n <= order; ++n) {
    outer = outer * half_cx;
    const std::vector<Rational> row = t_update_row(order, n - 1, table);
    BigFloat inner(prec);
    BigFloat power = one;
    for (long m = 0; m <= order; ++m) {
      const BigFloat v = BigFloat(Rational(row[m] * inverse_half_shift(m, n)), prec) * power;
      inner = (m % 2 == 0) ? inner + v : inner - v;
      power = power * x2;
    }
    total = total + outer * inner;
  }
  return {total, exp(cf * atan(x))};
}

/// d^{2m}/dx^{2m} (arctan(x)/x)^n at x = 0:
///   (-1)^m n! (2m)! / (2^n (m + n/2)) t_m(n-1).
inline Rational derivative_coeff(long n, long m, CoeffTable& table) {
  if (n < 1 || m < 0) throw DomainError("derivative_coeff needs n >= 1 and m >= 0");
  return Rational(sign_power(m)) * make_rational(factorial(n) * factorial(2 * m), pow2(n)) *
         inverse_half_shift(m, n) * coefficient(m, n - 1, table);
}

/// (t_3(n-1), 2^{n+3} (3 + n/2) / (63 (n-1)! 6!) (35 n^2 + 273 n + 502)).
inline std::pair<Rational, Rational> t3_closed_check(long n, CoeffTable& table) {
  if (n < 2) throw DomainError("t3 closed form needs n >= 2");
  const Rational lhs = coefficient(3, n - 1, table);
  const Rational rhs = Rational(pow2(n + 3)) * make_rational(6 + n, 2) /
                       Rational(Integer(63) * factorial(n - 1) * factorial(6)) *
                       Rational(35 * n * n + 273 * n + 502);
  return {lhs, rhs};
}

struct SecondOrderSides {
  BigFloat lhs;  // (x^2/n) T''(n, x), second derivative by central differences
  BigFloat rhs;  // (n+1) T(n) - 2(n + (n+1)x^2)/(1+x^2)^2 T(n-1) + (n-1)/(1+x^2)^2 T(n-2)
};

/// Both sides of the second-order relation between T(n), T(n-1), T(n-2),
/// with T'' from a central difference of step h. Needs n >= 2.
inline SecondOrderSides second_order_sides(long n, const BigFloat& x, const BigFloat& h) {
  if (n < 2) throw DomainError("second-order relation needs n >= 2");
  const long prec = x.precision();
  const BigFloat one(1, prec);
  const BigFloat nf(n, prec);
  const BigFloat x2 = x * x;
  const BigFloat d2 = (direct_oracle(n, x + h) - BigFloat(2, prec) * direct_oracle(n, x) + direct_oracle(n, x - h)) / (h * h);
  const BigFloat lhs = x2 / nf * d2;
  const BigFloat q = (one + x2) * (one + x2);
  const BigFloat rhs = BigFloat(n + 1, prec) * direct_oracle(n, x) -
                       BigFloat(2, prec) * (nf + BigFloat(n + 1, prec) * x2) / q * direct_oracle(n - 1, x) +
                       BigFloat(n - 1, prec) / q * direct_oracle(n - 2, x);
  return {lhs, rhs};
}

}  // namespace arctanpow
