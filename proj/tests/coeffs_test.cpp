#include <gtest/gtest.h>

#include <sstream>
#include <thread>
#include <vector>

#include "arctanpow/coeffs/coeff_table.hpp"
#include "arctanpow/coeffs/coeffs.hpp"
#include "arctanpow/coeffs/export.hpp"
#include "arctanpow/errors.hpp"

using namespace arctanpow;

TEST(Coeffs, BruteForceExamples) {
  EXPECT_EQ(t_bruteforce(5, 0), Rational(1));
  EXPECT_EQ(t_bruteforce(0, 3), make_rational(4, 3));
  EXPECT_EQ(t_bruteforce(1, 1), make_rational(8, 3));
  EXPECT_THROW(t_bruteforce(-1, 2), DomainError);
}

TEST(Coeffs, RecursiveExamples) {
  CoeffTable table;
  EXPECT_EQ(t_recursive(1, 2, table), make_rational(10, 3));
  EXPECT_EQ(t_recursive(0, 4, table), make_rational(2, 3));
  EXPECT_EQ(t_recursive(3, 0, table), Rational(1));
  EXPECT_THROW(t_recursive(0, -1, table), DomainError);
}

TEST(Coeffs, UpdateExamples) {
  CoeffTable table;
  EXPECT_EQ(t_update(1, 1, table), make_rational(8, 3));
  EXPECT_EQ(t_update(2, 1, table), make_rational(46, 15));
  EXPECT_EQ(t_update(0, 2, table), Rational(2));
}

TEST(Coeffs, FivePartExamples) {
  CoeffTable table;
  EXPECT_EQ(t_fivepart(1, 1, table), make_rational(8, 3));
  EXPECT_THROW(t_fivepart(2, 2, table), DegenerateRecursion);
  CoeffTable other;
  EXPECT_EQ(t_fivepart(3, 2, table), t_recursive(3, 2, other));
  try {
    t_fivepart(4, 6, table);
    FAIL() << "expected DegenerateRecursion";
  } catch (const DegenerateRecursion& e) {
    EXPECT_EQ(e.k(), 4);
    EXPECT_EQ(e.n(), 6);
  }
}

TEST(Coeffs, FivePartBoundaryCells) {
  // The k = 0 cells at n = 0, 1 rely on the t_0(-1) limit rule.
  CoeffTable table;
  EXPECT_EQ(t_fivepart(0, 0, table), Rational(1));
  EXPECT_EQ(t_fivepart(0, 1, table), Rational(2));
  EXPECT_EQ(t_fivepart(0, 5, table), make_rational(4, 15));
}

TEST(Coeffs, ClosedExamples) {
  EXPECT_EQ(t_closed(0, 1), Rational(2));
  EXPECT_EQ(t_closed(1, 1), make_rational(8, 3));
  EXPECT_EQ(t_closed(2, 0), Rational(1));
  EXPECT_EQ(t_closed(1, 0), Rational(1));
}

TEST(Coeffs, DigammaFormExamples) {
  EXPECT_EQ(t_digamma_form(1, 1), make_rational(8, 3));
  EXPECT_EQ(t_digamma_form(0, 1), Rational(2));
  EXPECT_EQ(t_digamma_form(1, 2), make_rational(10, 3));
  EXPECT_THROW(t_digamma_form(1, 3), DomainError);
}

TEST(Coeffs, FiveRoutesAgree) {
  CoeffTable table;
  EXPECT_NO_THROW(fill_triangle(12, 8, table, RouteSet{.bruteforce = true}));
  for (long n = 0; n <= 8; ++n) {
    for (long k = 0; k <= 12; ++k) {
      unsigned want = static_cast<unsigned>(Method::BruteForce) | static_cast<unsigned>(Method::Recursive) |
                      static_cast<unsigned>(Method::Update) | static_cast<unsigned>(Method::Closed);
      if (!fivepart_degenerate(k, n)) want |= static_cast<unsigned>(Method::FivePart);
      EXPECT_EQ(table.methods_at({k, n}) & want, want) << k << "," << n;
    }
  }
}

TEST(Coeffs, FourRoutesAgreeOnLargerTriangle) {
  CoeffTable table;
  EXPECT_NO_THROW(fill_triangle(40, 16, table));
  for (long k = 0; k <= 40; ++k) {
    EXPECT_EQ(*table.lookup({k, 1}), t_digamma_form(k, 1));
    EXPECT_EQ(*table.lookup({k, 2}), t_digamma_form(k, 2));
  }
}

TEST(Coeffs, PositiveAndIncreasingInK) {
  CoeffTable table;
  for (long n = 1; n <= 10; ++n) {
    const auto row = t_update_row(30, n, table);
    for (long k = 0; k <= 30; ++k) {
      EXPECT_GT(row[k], 0);
      if (k > 0) {
        EXPECT_GT(row[k], row[k - 1]);
      }
    }
  }
}

TEST(Coeffs, TotalCoefficientIsZeroOutsideTriangle) {
  CoeffTable table;
  EXPECT_EQ(coefficient(1, -1, table), Rational(0));
  EXPECT_EQ(coefficient(-1, 3, table), Rational(0));
  EXPECT_EQ(coefficient(1, 1, table), make_rational(8, 3));
}

TEST(CoeffTable, ClashIsDetected) {
  CoeffTable table;
  table.record({1, 1}, Method::Recursive, make_rational(8, 3));
  EXPECT_THROW(table.record({1, 1}, Method::Closed, make_rational(7, 3)), CoeffClash);
  EXPECT_EQ(table.record({1, 1}, Method::Closed, make_rational(8, 3)), make_rational(8, 3));
  EXPECT_EQ(table.methods_at({1, 1}), static_cast<unsigned>(Method::Recursive) | static_cast<unsigned>(Method::Closed));
  EXPECT_FALSE(table.lookup({1, 1}, Method::Update).has_value());
}

TEST(CoeffTable, CorruptedCellMakesRoutesClash) {
  CoeffTable table;
  table.overwrite({1, 1}, Rational(3));
  EXPECT_THROW(fill_triangle(3, 3, table, RouteSet{.recursive = false, .update = false, .fivepart = false}),
               CoeffClash);
}

TEST(CoeffTable, ConcurrentFillsAreIdempotent) {
  CoeffTable shared;
  std::vector<std::thread> threads;
  for (int i = 0; i < 6; ++i) threads.emplace_back([&shared] { fill_triangle(20, 8, shared); });
  for (auto& t : threads) t.join();
  CoeffTable single;
  fill_triangle(20, 8, single);
  const auto a = shared.entries(20, 8);
  const auto b = single.entries(20, 8);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].index, b[i].index);
    EXPECT_EQ(a[i].value, b[i].value);
  }
}

TEST(CoeffTable, EntriesAreOrderedNMajor) {
  CoeffTable table;
  fill_triangle(2, 1, table);
  const auto e = table.entries(2, 1);
  ASSERT_EQ(e.size(), 6u);
  EXPECT_EQ(e[0].index, (CellIndex{0, 0}));
  EXPECT_EQ(e[3].index, (CellIndex{0, 1}));
  EXPECT_EQ(e[5].index, (CellIndex{2, 1}));
}

TEST(CoeffsExport, CsvAndJson) {
  CoeffTable table;
  fill_triangle(2, 1, table);
  std::ostringstream out;
  write_coeffs_csv(out, table.entries(2, 1));
  EXPECT_EQ(out.str(), "k,n,t\n0,0,1\n1,0,1\n2,0,1\n0,1,2\n1,1,8/3\n2,1,46/15\n");
  const auto j = coeffs_json(table.entries(2, 1));
  ASSERT_EQ(j.size(), 6u);
  EXPECT_EQ(j[4]["k"], 1);
  EXPECT_EQ(j[4]["n"], 1);
  EXPECT_EQ(j[4]["t"], "8/3");
}
