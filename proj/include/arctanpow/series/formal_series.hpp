#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "arctanpow/algebra/rational.hpp"

namespace arctanpow {

/// Power series in x truncated after x^order, with exact coefficients.
///
/// Binary operations truncate to the smaller of the two orders, so every
/// coefficient that is kept is exact.
class FormalSeries {
 public:
  explicit FormalSeries(std::size_t order) : coeffs_(order + 1) {}

  explicit FormalSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
  }

  static FormalSeries one(std::size_t order) {
    FormalSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  const Rational& operator[](std::size_t j) const { return coeffs_.at(j); }
  Rational& operator[](std::size_t j) { return coeffs_.at(j); }

  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  FormalSeries truncated(std::size_t order) const {
    std::vector<Rational> v(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(order, this->order()) + 1));
    return FormalSeries(std::move(v));
  }

  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    FormalSeries out(order);
    for (std::size_t j = 0; j <= order; ++j) out.coeffs_[j] = a.coeffs_[j] + b.coeffs_[j];
    return out;
  }

  // Cauchy product.
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    FormalSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= order; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  friend FormalSeries operator*(const Rational& s, FormalSeries a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }

  friend bool operator==(const FormalSeries& a, const FormalSeries& b) { return a.coeffs_ == b.coeffs_; }

  // Repeated Cauchy products.
  FormalSeries pow(unsigned e) const {
    FormalSeries result = one(order());
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
  }

  // f^y for rational y and constant term 1, via the recurrence from
  // f g' = y f' g:  g_k = (1/k) sum_{j=1..k} ((y+1) j - k) f_j g_{k-j}.
  FormalSeries pow(const Rational& y) const {
    if (coeffs_[0] != 1) throw DomainError("rational power needs a series with constant term 1");
    FormalSeries g(order());
    g.coeffs_[0] = 1;
    for (std::size_t k = 1; k <= order(); ++k) {
      Rational acc(0);
      for (std::size_t j = 1; j <= k; ++j) {
        if (coeffs_[j] == 0) continue;
        Rational w = (y + 1) * Rational(static_cast<long>(j)) - Rational(static_cast<long>(k));
        acc += w * coeffs_[j] * g.coeffs_[k - j];
      }
      g.coeffs_[k] = acc / Rational(static_cast<long>(k));
    }
    return g;
  }

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace arctanpow
