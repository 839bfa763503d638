#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "arctanpow/errors.hpp"

namespace arctanpow {

using Integer = mpz_class;

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; only the two-argument constructor needs an explicit
// canonicalize(), which make_rational does.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

// 1 / (m + n/2), the weight of every level of the nested sums.
inline Rational inverse_half_shift(long m, long n) { return make_rational(2, 2 * m + n); }

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline Rational pow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;  // powers of coprime parts stay coprime
}

// (-1)^e as a small integer.
inline long sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return DomainError("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  return make_rational(Integer(num), Integer(den));
}

}  // namespace arctanpow
