#include "consets/aggregate.hpp"
#include "consets/oracle.hpp"

#include <gtest/gtest.h>

using namespace consets;

namespace {
BigRational frac(long long p, long long q) { return {BigInt(p), BigInt(q)}; }
}  // namespace

TEST(Count, Examples) {
  EXPECT_EQ(count_connected_sets(2, 2), 13);
  EXPECT_EQ(count_connected_sets(3, 2), 51);
  for (std::size_t n = 1; n <= 30; ++n) EXPECT_EQ(count_connected_sets(1, n), n * (n + 1) / 2);
  EXPECT_THROW(count_connected_sets(0, 3), domain_error);
  EXPECT_THROW(count_connected_sets(3, 0), domain_error);
}

TEST(TotalOrder, Examples) {
  EXPECT_EQ(total_order(2, 2), 28);
  EXPECT_EQ(total_order(3, 2), 162);
  for (std::size_t n = 1; n <= 30; ++n)
    EXPECT_EQ(total_order(1, n), n * (n + 1) * (n + 2) / 6);
}

TEST(Average, Examples) {
  EXPECT_EQ(average_order(2, 1), frac(4, 3));
  EXPECT_EQ(average_order(3, 2), frac(54, 17));
  for (std::size_t n = 1; n <= 30; ++n)
    EXPECT_EQ(average_order(1, n), frac(static_cast<long long>(n) + 2, 3));
}

TEST(Density, Examples) {
  EXPECT_EQ(density(3, 2), frac(9, 17));
  EXPECT_EQ(density(1, 1), BigRational(1));
  EXPECT_EQ(density(2, 2), frac(7, 13));
}

TEST(ProductResult, InvariantsHold) {
  for (std::size_t m = 1; m <= 6; ++m) {
    ProductEngine engine(m, 25);
    for (std::size_t n = 1; n <= 25; ++n) {
      const auto r = engine.result(n);
      const BigInt mn = BigInt(m) * n;
      EXPECT_EQ(r.average_A * BigRational(r.count_N), BigRational(r.total_S));
      EXPECT_EQ(r.density_D * BigRational(mn), r.average_A);
      EXPECT_GE(r.average_A, BigRational(1));
      EXPECT_LE(r.average_A, BigRational(mn));
      EXPECT_GE(r.density_D, BigRational(BigInt(1), mn));
      EXPECT_LE(r.density_D, BigRational(1));
    }
  }
}

TEST(ProductResult, ExplicitDoubleSumAgrees) {
  for (std::size_t m = 1; m <= 5; ++m) {
    ProductEngine engine(m, 12);
    for (std::size_t n = 1; n <= 12; ++n)
      EXPECT_EQ(average_order_explicit(m, n), engine.result(n).average_A) << m << "," << n;
  }
}

TEST(ProductResult, MatchesEnumeration) {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; m * n <= 16; ++n) {
      const auto census = oracle::census(oracle::build_km_pn(m, n).graph());
      const auto r = compute_product(m, n);
      EXPECT_EQ(r.count_N, census.N()) << m << "," << n;
      EXPECT_EQ(r.total_S, census.S()) << m << "," << n;
      EXPECT_EQ(r.average_A, census.A()) << m << "," << n;
      EXPECT_EQ(r.density_D, census.A() / BigRational(BigInt(m) * n));
    }
}

TEST(ProductEngine, IncrementalMatchesFresh) {
  ProductEngine engine(4, 1);
  for (std::size_t n : {3, 1, 10, 7}) {
    const auto fresh = compute_product(4, n);
    const auto inc = engine.result(n);
    EXPECT_EQ(inc.count_N, fresh.count_N);
    EXPECT_EQ(inc.total_S, fresh.total_S);
  }
}
