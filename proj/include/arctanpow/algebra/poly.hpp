#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arctanpow/algebra/rational.hpp"

namespace arctanpow {

/// Univariate polynomial over the rationals.
///
/// Coefficients are stored by ascending power with trailing zeros trimmed, so
/// the zero polynomial has no coefficients and two equal polynomials always
/// have identical storage.
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

  static Poly monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Poly(std::move(v));
  }

  static Poly indeterminate() { return monomial(Rational(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  Rational coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
  }

  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  Rational operator()(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly& operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  Poly& operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly pow(unsigned e) const {
    Poly result = constant(Rational(1));
    Poly base = *this;
    while (e > 0) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  // Human-readable, highest power first, e.g. "y^2 + 3*y + 2".
  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (long p = degree(); p >= 0; --p) {
      const Rational& c = coeffs_[static_cast<std::size_t>(p)];
      if (c == 0) continue;
      Rational mag = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::string term;
      if (p == 0 || mag != 1) term = arctanpow::to_string(mag);
      if (p > 0) {
        if (!term.empty()) term += "*";
        term += var;
        if (p > 1) term += "^" + std::to_string(p);
      }
      out += term;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Rising factorial in the indeterminate: (Y + shift)(Y + shift + 1)...(Y + shift + length - 1).
/// The empty product (length 0) is the constant 1.
inline Poly poly_pochhammer(const Rational& shift, std::size_t length) {
  Poly result = Poly::constant(Rational(1));
  for (std::size_t j = 0; j < length; ++j) {
    Rational root = shift + Rational(static_cast<long>(j));
    result *= Poly(std::vector<Rational>{root, Rational(1)});
  }
  return result;
}

/// Lagrange interpolation through distinct abscissae.
inline Poly interpolate(std::span<const std::pair<Rational, Rational>> points) {
  Poly result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Poly basis = Poly::constant(Rational(1));
    Rational denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      Rational neg_root = -points[j].first;
      basis *= Poly(std::vector<Rational>{neg_root, Rational(1)});
      denom *= points[i].first - points[j].first;
    }
    if (denom == 0) throw DomainError("interpolation abscissae must be distinct");
    Rational scale = points[i].second / denom;
    result += basis * scale;
  }
  return result;
}

}  // namespace arctanpow
