#pragma once

#include <string>

#include "arctanpow/algebra/rational.hpp"

namespace arctanpow {

/// Exact element a + b*gamma + c*ln2 of the rational span of {1, gamma, ln 2}.
///
/// Digamma values at positive integers and half-integers all live here. The
/// three basis elements are treated as linearly independent over Q, so
/// equality is componentwise.
struct DigammaExpr {
  Rational constant;
  Rational gamma;
  Rational ln2;

  bool is_rational() const { return gamma == 0 && ln2 == 0; }

  Rational to_rational() const {
    if (!is_rational())
      throw BasisOverflow("digamma expression is not rational: " + to_string());
    return constant;
  }

  std::string to_string() const {
    return arctanpow::to_string(constant) + " + " + arctanpow::to_string(gamma) + "*gamma + " +
           arctanpow::to_string(ln2) + "*ln2";
  }

  DigammaExpr& operator+=(const DigammaExpr& o) {
    constant += o.constant;
    gamma += o.gamma;
    ln2 += o.ln2;
    return *this;
  }
  DigammaExpr& operator-=(const DigammaExpr& o) {
    constant -= o.constant;
    gamma -= o.gamma;
    ln2 -= o.ln2;
    return *this;
  }
  DigammaExpr& operator*=(const Rational& s) {
    constant *= s;
    gamma *= s;
    ln2 *= s;
    return *this;
  }

  friend DigammaExpr operator+(DigammaExpr a, const DigammaExpr& b) { return a += b; }
  friend DigammaExpr operator-(DigammaExpr a, const DigammaExpr& b) { return a -= b; }
  friend DigammaExpr operator*(DigammaExpr a, const Rational& s) { return a *= s; }
  friend DigammaExpr operator*(const Rational& s, DigammaExpr a) { return a *= s; }
  friend bool operator==(const DigammaExpr&, const DigammaExpr&) = default;
};

inline std::string to_string(const DigammaExpr& e) { return e.to_string(); }

/// psi(k) for k >= 1: -gamma + H_{k-1}.
inline DigammaExpr digamma_at_integer(long k) {
  if (k <= 0) throw DomainError("digamma has a pole at nonpositive integer " + std::to_string(k));
  DigammaExpr e{Rational(0), Rational(-1), Rational(0)};
  for (long j = 1; j < k; ++j) e.constant += make_rational(1, j);
  return e;
}

/// psi(k + 1/2) for k >= 0: -gamma - 2 ln 2 + 2 * sum_{j=1..k} 1/(2j - 1).
inline DigammaExpr digamma_at_half_integer(long k) {
  if (k < 0) throw DomainError("half-integer digamma index must be nonnegative");
  DigammaExpr e{Rational(0), Rational(-1), Rational(-2)};
  for (long j = 1; j <= k; ++j) e.constant += make_rational(2, 2 * j - 1);
  return e;
}

}  // namespace arctanpow
