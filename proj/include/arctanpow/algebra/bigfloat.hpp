#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>

#include "arctanpow/algebra/rational.hpp"

namespace arctanpow {

inline constexpr long kDefaultPrecisionBits = 256;

/// Binary floating-point number with an explicit precision in bits.
///
/// Thin RAII owner of an mpfr_t. Every operation rounds to nearest, so results
/// are a deterministic function of inputs and precision. Binary operations
/// produce a value at the larger of the two operand precisions. Used only for
/// numeric oracles; identities are checked exactly elsewhere.
class BigFloat {
 public:
  explicit BigFloat(long precision_bits = kDefaultPrecisionBits) {
    mpfr_init2(value_, clamp(precision_bits));
    mpfr_set_zero(value_, 1);
  }

  BigFloat(long v, long precision_bits) : BigFloat(precision_bits) {
    mpfr_set_si(value_, v, MPFR_RNDN);
  }

  BigFloat(const Rational& q, long precision_bits) : BigFloat(precision_bits) {
    mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
  }

  // Decimal text, parsed directly at the target precision.
  static BigFloat parse(std::string_view text, long precision_bits = kDefaultPrecisionBits) {
    BigFloat r(precision_bits);
    std::string s(text);
    if (s.empty() || mpfr_set_str(r.value_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw DomainError("not a decimal number: '" + s + "'");
    return r;
  }

  static BigFloat pi(long precision_bits = kDefaultPrecisionBits) {
    BigFloat r(precision_bits);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
  }

  // 2^e exactly.
  static BigFloat power_of_two(long e, long precision_bits = kDefaultPrecisionBits) {
    BigFloat r(1, precision_bits);
    mpfr_mul_2si(r.value_, r.value_, e, MPFR_RNDN);
    return r;
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(value_, mpfr_get_prec(o.value_));
    mpfr_set(value_, o.value_, MPFR_RNDN);
  }

  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, o.value_);
  }

  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(value_, mpfr_get_prec(o.value_));
      mpfr_set(value_, o.value_, MPFR_RNDN);
    }
    return *this;
  }

  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(value_, o.value_);
    return *this;
  }

  ~BigFloat() { mpfr_clear(value_); }

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }

  // Same value rounded to a new precision.
  BigFloat with_precision(long precision_bits) const {
    BigFloat r(precision_bits);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
  }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  // Scientific notation with enough decimal digits to represent the precision.
  std::string to_string(int digits = 0) const {
    if (digits <= 0) digits = static_cast<int>(std::ceil(precision() * 0.30103)) + 1;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.value_, a.value_, MPFR_RNDN);
    return r;
  }

  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

  // Bitwise identity, including precision.
  bool identical(const BigFloat& o) const {
    return precision() == o.precision() && mpfr_total_order_p(value_, o.value_) &&
           mpfr_total_order_p(o.value_, value_);
  }

 private:
  static mpfr_prec_t clamp(long bits) {
    return static_cast<mpfr_prec_t>(std::max<long>(bits, MPFR_PREC_MIN));
  }

  mpfr_t value_;
};

inline BigFloat abs(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}

inline BigFloat atan(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_atan(r.get(), a.get(), MPFR_RNDN);
  return r;
}

inline BigFloat exp(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_exp(r.get(), a.get(), MPFR_RNDN);
  return r;
}

inline BigFloat log(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_log(r.get(), a.get(), MPFR_RNDN);
  return r;
}

inline BigFloat pow(const BigFloat& a, unsigned long e) {
  BigFloat r(a.precision());
  mpfr_pow_ui(r.get(), a.get(), e, MPFR_RNDN);
  return r;
}

// a * 2^e, exact.
inline BigFloat ldexp(const BigFloat& a, long e) {
  BigFloat r(a.precision());
  mpfr_mul_2si(r.get(), a.get(), e, MPFR_RNDN);
  return r;
}

}  // namespace arctanpow
