#include <gtest/gtest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "arctanpow/algebra/bigfloat.hpp"
#include "arctanpow/algebra/digamma.hpp"
#include "arctanpow/algebra/poly.hpp"
#include "arctanpow/algebra/rational.hpp"
#include "arctanpow/errors.hpp"

using namespace arctanpow;

TEST(Rational, CanonicalFormAndSerialization) {
  EXPECT_EQ(to_string(make_rational(4, 6)), "2/3");
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(8, 4)), "2");
  EXPECT_EQ(to_string(make_rational(0, 7)), "0");
  EXPECT_THROW(make_rational(1, 0), DomainError);
}

TEST(Rational, InverseHalfShift) {
  EXPECT_EQ(inverse_half_shift(0, 1), Rational(2));
  EXPECT_EQ(inverse_half_shift(3, 2), make_rational(1, 4));
  EXPECT_EQ(inverse_half_shift(2, 3), make_rational(2, 7));
}

TEST(Rational, ParseRoundTrip) {
  for (const char* text : {"0", "5", "-5", "2/3", "-46/15", "123456789012345678901234567891/1024"}) {
    EXPECT_EQ(to_string(parse_rational(text)), text);
  }
  EXPECT_EQ(parse_rational("+4/6"), make_rational(2, 3));
  for (const char* bad : {"", "/", "1/", "1/0", "x", "1.5", "1/-2", "--1"}) {
    EXPECT_THROW(parse_rational(bad), DomainError) << bad;
  }
}

TEST(Rational, FactorialAndPowers) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(pow2(0), 1);
  EXPECT_EQ(pow2(70), Integer("1180591620717411303424"));
  EXPECT_EQ(pow(make_rational(-2, 3), 3), make_rational(-8, 27));
  EXPECT_EQ(pow(make_rational(5, 7), 0), Rational(1));
  EXPECT_EQ(sign_power(0), 1);
  EXPECT_EQ(sign_power(3), -1);
}

TEST(Poly, ArithmeticAndEvaluation) {
  const Poly y = Poly::indeterminate();
  const Poly p = (y + Poly::constant(Rational(1))) * (y + Poly::constant(Rational(2)));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coefficient(0), Rational(2));
  EXPECT_EQ(p.coefficient(1), Rational(3));
  EXPECT_EQ(p.coefficient(5), Rational(0));
  EXPECT_EQ(p(make_rational(1, 2)), make_rational(15, 4));
  EXPECT_EQ(p.to_string("y"), "y^2 + 3*y + 2");
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ((p - p).to_string(), "0");
  EXPECT_EQ(y.pow(3), Poly::monomial(Rational(1), 3));
  EXPECT_EQ((-y).to_string(), "-x");
}

TEST(Poly, PochhammerIsRisingFactorial) {
  const Poly p = poly_pochhammer(Rational(0), 3);  // y(y+1)(y+2)
  EXPECT_EQ(p(Rational(2)), Rational(24));
  EXPECT_EQ(poly_pochhammer(Rational(5), 0), Poly::constant(Rational(1)));
  EXPECT_EQ(poly_pochhammer(Rational(-1), 2)(Rational(1)), Rational(0));
}

TEST(Poly, InterpolationRecoversPolynomial) {
  const Poly target({Rational(502), Rational(273), Rational(35)});
  std::vector<std::pair<Rational, Rational>> pts;
  for (long n = 1; n <= 3; ++n) pts.emplace_back(Rational(n), target(Rational(n)));
  EXPECT_EQ(interpolate(pts), target);
}

TEST(Digamma, IntegerAndHalfIntegerValues) {
  EXPECT_EQ(digamma_at_integer(1), (DigammaExpr{Rational(0), Rational(-1), Rational(0)}));
  EXPECT_EQ(digamma_at_integer(4), (DigammaExpr{make_rational(11, 6), Rational(-1), Rational(0)}));
  EXPECT_EQ(digamma_at_half_integer(0), (DigammaExpr{Rational(0), Rational(-1), Rational(-2)}));
  EXPECT_EQ(digamma_at_half_integer(2), (DigammaExpr{make_rational(8, 3), Rational(-1), Rational(-2)}));
  EXPECT_THROW(digamma_at_integer(0), DomainError);
  EXPECT_THROW(digamma_at_half_integer(-1), DomainError);
}

TEST(Digamma, NumericValuesMatchLibm) {
  const double gamma = 0.57721566490153286061;
  auto value = [&](const DigammaExpr& e) {
    return e.constant.get_d() + e.gamma.get_d() * gamma + e.ln2.get_d() * std::log(2.0);
  };
  // psi(x+1) - psi(x) = 1/x, and psi(1/2) = -gamma - 2 ln 2 = -1.96351...
  EXPECT_NEAR(value(digamma_at_half_integer(0)), -1.9635100260214235, 1e-14);
  EXPECT_NEAR(value(digamma_at_integer(10)), 2.251752589066721, 1e-14);
  EXPECT_NEAR(value(digamma_at_half_integer(3)), 1.1031566406452432, 1e-14);
}

TEST(Digamma, BracketCancelsToRational) {
  const DigammaExpr bracket = digamma_at_half_integer(5) - digamma_at_half_integer(0) +
                              digamma_at_integer(1) * Rational(2) - digamma_at_integer(6) * Rational(2);
  ASSERT_TRUE(bracket.is_rational());
  Rational expected(0);
  for (long j = 1; j <= 5; ++j) expected += make_rational(2, 2 * j - 1) - make_rational(2, j);
  EXPECT_EQ(bracket.to_rational(), expected);
  EXPECT_THROW(digamma_at_integer(3).to_rational(), BasisOverflow);
  EXPECT_EQ(digamma_at_integer(3).to_string(), "3/2 + -1*gamma + 0*ln2");
}

TEST(BigFloat, PrecisionAndArithmetic) {
  const BigFloat a(1, 300);
  const BigFloat b(3, 200);
  const BigFloat q = a / b;
  EXPECT_EQ(q.precision(), 300);
  EXPECT_EQ(BigFloat().precision(), kDefaultPrecisionBits);
  EXPECT_TRUE((q * b - a).is_zero() || abs(q * b - a) < BigFloat::power_of_two(-290, 300));
  EXPECT_EQ(BigFloat(make_rational(1, 4), 64).to_double(), 0.25);
  EXPECT_EQ(BigFloat::power_of_two(-10).to_double(), 1.0 / 1024);
  EXPECT_EQ(BigFloat::parse("0.5").to_double(), 0.5);
  EXPECT_THROW(BigFloat::parse("abc"), DomainError);
  EXPECT_THROW(BigFloat::parse(""), DomainError);
}

TEST(BigFloat, TranscendentalsAgreeWithDouble) {
  const BigFloat x = BigFloat::parse("0.3");
  EXPECT_NEAR(atan(x).to_double(), std::atan(0.3), 1e-16);
  EXPECT_NEAR(exp(x).to_double(), std::exp(0.3), 1e-15);
  EXPECT_NEAR(log(x).to_double(), std::log(0.3), 1e-15);
  EXPECT_NEAR(BigFloat::pi().to_double(), M_PI, 1e-16);
  EXPECT_EQ(ldexp(BigFloat(3, 64), 2).to_double(), 12.0);
  EXPECT_EQ(pow(BigFloat(3, 64), 4).to_double(), 81.0);
}

TEST(BigFloat, DeterministicText) {
  const BigFloat a = atan(BigFloat::parse("0.7"));
  const BigFloat b = atan(BigFloat::parse("0.7"));
  EXPECT_TRUE(a.identical(b));
  EXPECT_EQ(a.to_string(), b.to_string());
  EXPECT_EQ(BigFloat(1, 64).to_string(5), "1.0000e+00");
}

TEST(BigFloat, CopyAndMoveKeepValue) {
  BigFloat a = BigFloat::pi(128);
  BigFloat b = a;
  BigFloat c = std::move(a);
  EXPECT_TRUE(b.identical(c));
  b = c + c;
  EXPECT_EQ(b.precision(), 128);
  EXPECT_TRUE(b > c);
  EXPECT_EQ(c.sign(), 1);
  EXPECT_EQ((-c).sign(), -1);
}
