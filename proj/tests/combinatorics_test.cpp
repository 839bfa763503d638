#include <gtest/gtest.h>

#include <sstream>
#include <thread>
#include <vector>

#include "arctanpow/algebra/poly.hpp"
#include "arctanpow/coeffs/coeffs.hpp"
#include "arctanpow/combinatorics/combinatorics.hpp"
#include "arctanpow/combinatorics/export.hpp"
#include "arctanpow/errors.hpp"
#include "arctanpow/series/formal_series.hpp"

using namespace arctanpow;

TEST(Stirling1, SmallValues) {
  EXPECT_EQ(stirling1(3, 2), -3);
  EXPECT_EQ(stirling1(3, 1), 2);
  EXPECT_EQ(stirling1(4, 4), 1);
  EXPECT_EQ(stirling1(0, 0), 1);
  EXPECT_EQ(stirling1(5, 0), 0);
  EXPECT_EQ(stirling1(2, 5), 0);
  EXPECT_THROW(stirling1(-1, 0), DomainError);
}

TEST(Stirling1, RowsExpandFallingFactorial) {
  for (long n = 1; n <= 12; ++n) {
    Poly falling = Poly::constant(Rational(1));
    for (long j = 0; j < n; ++j) falling *= Poly::indeterminate() - Poly::constant(Rational(j));
    for (long m = 0; m <= n; ++m) EXPECT_EQ(Rational(stirling1(n, m)), falling.coefficient(m)) << n << "," << m;
  }
}

TEST(Stirling1, ConcurrentReadersAgree) {
  std::vector<std::thread> threads;
  std::vector<Integer> seen(8);
  for (int i = 0; i < 8; ++i)
    threads.emplace_back([&seen, i] { seen[i] = stirling1(40 + i % 2, 20); });
  for (auto& t : threads) t.join();
  for (int i = 0; i < 8; ++i) EXPECT_EQ(seen[i], stirling1(40 + i % 2, 20));
}

TEST(LCoeff, SmallValues) {
  EXPECT_EQ(L_coeff(2, 0), Rational(2));
  EXPECT_EQ(L_coeff(0, 0), Rational(1));
  EXPECT_EQ(L_coeff(2, 1), Rational(0));
  EXPECT_THROW(L_coeff(-1, 0), DomainError);
}

TEST(PClosed, SmallValues) {
  EXPECT_EQ(p_closed(1, 1), Rational(2));
  EXPECT_EQ(p_closed(4, 3), Rational(0));
  EXPECT_EQ(p_closed(9, 2), Rational(0));
  // t_1(0) = 1 = (3/2) p(1, 3); no alternating sign appears.
  EXPECT_EQ(p_closed(1, 3), make_rational(2, 3));
  EXPECT_THROW(p_closed(0, 3), DomainError);
}

TEST(PClosed, AgreesWithPolynomialExpansion) {
  for (long m = 1; m <= 14; ++m) {
    const auto from_poly = p_from_poly(m);
    ASSERT_EQ(from_poly.size(), static_cast<std::size_t>(m / 2 + 1));
    for (long l = 0; 2 * l <= m - 1; ++l) EXPECT_EQ(from_poly[l], p_closed(m - 2 * l, m)) << m << "," << l;
  }
}

TEST(PFromPoly, Examples) {
  EXPECT_EQ(p_from_poly(1), std::vector<Rational>{Rational(2)});
  CoeffTable table;
  EXPECT_EQ(make_rational(1, 1) * p_from_poly(2)[0], t_recursive(0, 1, table));  // (2/2) p = t_0(1) = 2
  EXPECT_EQ(p_from_poly(3).size(), 2u);
}

TEST(LemmaPoly, OddOrEvenOnly) {
  for (long m = 1; m <= 10; ++m) {
    const Poly p = lemma_lhs_poly(m);
    EXPECT_EQ(p.degree(), m);
    for (long d = 0; d <= m; ++d)
      if ((m - d) % 2 != 0) {
        EXPECT_EQ(p.coefficient(d), Rational(0));
      }
  }
  EXPECT_EQ(lemma_lhs_poly(1), Poly::monomial(Rational(2), 1));
  EXPECT_THROW(lemma_lhs_poly(0), DomainError);
}

TEST(GCoeff, MatchesFormalPower) {
  EXPECT_EQ(g_coeff(0, make_rational(7, 3)), Rational(1));
  EXPECT_EQ(g_coeff(2, Rational(1)), Rational(2));
  const std::size_t order = 8;
  FormalSeries ratio(order);  // (1+x)/(1-x) = 1 + 2x + 2x^2 + ...
  ratio[0] = 1;
  for (std::size_t j = 1; j <= order; ++j) ratio[j] = 2;
  for (const Rational& y : {Rational(3), make_rational(1, 3), make_rational(-7, 4), make_rational(5, 2)}) {
    const FormalSeries power = ratio.pow(y);
    for (long m = 0; m <= static_cast<long>(order); ++m) EXPECT_EQ(g_coeff(m, y), power[m]) << m << " y=" << y;
  }
}

TEST(GCoeff, PoleReported) {
  // 1 - m - y = 0 at y = 1 - m hits a zero denominator.
  EXPECT_THROW(g_coeff(3, Rational(-2)), PoleError);
  EXPECT_THROW(g_coeff(-1, Rational(1)), DomainError);
}

TEST(CombinatoricsExport, StirlingCsvAndJson) {
  std::ostringstream out;
  write_stirling_csv(out, 3);
  EXPECT_EQ(out.str(), "n,m,s\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,-1\n2,2,1\n3,0,0\n3,1,2\n3,2,-3\n3,3,1\n");
  const auto j = stirling_json(3);
  ASSERT_EQ(j.size(), 10u);
  EXPECT_EQ(j[8]["s"], "-3");
}

TEST(CombinatoricsExport, PCsvAndJson) {
  std::ostringstream out;
  write_p_csv(out, 3);
  EXPECT_EQ(out.str(), "m,l,n,p\n1,0,1,2\n2,0,2,2\n3,0,3,4/3\n3,1,1,2/3\n");
  const auto j = p_json(3);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[3]["p"], "2/3");
  EXPECT_EQ(j[3]["n"], 1);
}
