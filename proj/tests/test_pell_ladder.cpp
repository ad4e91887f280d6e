#include "consets/aggregate.hpp"
#include "consets/charpoly_recurrence.hpp"
#include "consets/pell_ladder.hpp"

#include <gtest/gtest.h>

using namespace consets;

namespace {
BigRational frac(long long p, long long q) { return {BigInt(p), BigInt(q)}; }
}  // namespace

TEST(PellPair, Sequences) {
  PellPair p;
  const long long pell[] = {0, 1, 2, 5, 12, 29, 70};
  const long long half[] = {1, 3, 7, 17, 41, 99, 239};
  for (std::size_t k = 0; k < 7; ++k) {
    EXPECT_EQ(p.pell(k), pell[k]);
    EXPECT_EQ(p.halfcomp(k), half[k]);
  }
  for (std::size_t k = 1; k <= 100; ++k) EXPECT_EQ(p.halfcomp(k), p.halfcomp(k - 1) + 2 * p.pell(k));
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(closed_form_f2(1), 3);
  EXPECT_EQ(closed_form_f2(2), 7);
  EXPECT_EQ(closed_form_f2(6), 239);
  EXPECT_EQ(closed_form_f1(1), 1);
  EXPECT_EQ(closed_form_f1(2), 2);
  EXPECT_EQ(closed_form_f1(5), 29);
}

TEST(ClosedForms, MatchGeneralEngine) {
  const auto streamed = stream_f(build_recurrence(2), 200);
  const FTable ft(2, 200);
  for (std::size_t k = 1; k <= 200; ++k) {
    EXPECT_EQ(closed_form_f2(k), streamed[k - 1]);
    EXPECT_EQ(closed_form_f1(k), ft.f(1, k));
  }
}

TEST(LadderCount, Examples) {
  EXPECT_EQ(ladder_count(1), 3);
  EXPECT_EQ(ladder_count(2), 13);
  EXPECT_EQ(ladder_count(3), 40);
  EXPECT_EQ(ladder_count(3), 3 * 3 + 2 * 7 + 1 * 17);
  EXPECT_THROW(ladder_count(0), domain_error);
}

TEST(LadderCount, NumeratorAlwaysEven) {
  PellPair p;
  for (std::size_t n = 1; n <= 500; ++n)
    EXPECT_EQ((p.halfcomp(n + 2) - 4 * BigInt(n) - 7) % 2, 0) << "n=" << n;
}

TEST(LadderAverage, Examples) {
  EXPECT_EQ(ladder_average(1), frac(4, 3));
  EXPECT_EQ(ladder_weighted_order_sum_times4(1), 16);
  EXPECT_EQ(ladder_average(2), frac(28, 13));
  EXPECT_EQ(ladder_weighted_order_sum_times4(2), 112);
  EXPECT_EQ(ladder_average(3), BigRational(total_order(2, 3), ladder_count(3)));
}

TEST(LadderAverage, LiteralPrecedenceDisagreesWithEnumeration) {
  EXPECT_EQ(ladder_average_as_printed(1), frac(16, 23));
  EXPECT_NE(ladder_average_as_printed(1), average_order(2, 1));
}

TEST(VinceAverage, Examples) {
  EXPECT_EQ(vince_average(1), frac(4, 3));
  EXPECT_EQ(vince_average(2), frac(28, 13));
  EXPECT_EQ(vince_average(4), ladder_average(4));
}

TEST(LadderDensity, Examples) {
  EXPECT_EQ(ladder_density(1), frac(2, 3));
  EXPECT_EQ(ladder_density(2), frac(7, 13));
  EXPECT_EQ(ladder_density(10), density(2, 10));
}

TEST(Ladder, AgreesWithGeneralEngine) {
  ProductEngine engine(2, 200);
  for (std::size_t n = 1; n <= 200; ++n) {
    const auto r = engine.result(n);
    ASSERT_EQ(ladder_count(n), r.count_N) << n;
    ASSERT_EQ(ladder_average(n), r.average_A) << n;
    ASSERT_EQ(vince_average(n), r.average_A) << n;
    ASSERT_EQ(ladder_density(n), r.density_D) << n;
  }
}

TEST(SumIdentities, Examples) {
  EXPECT_EQ(3 + 7 + 17, (41 + 17 - 4) / 2);
  EXPECT_EQ(1 * 3, (17 - 2 * 7 + 3) / 2);
  const auto r1 = ladder_sum_identities(1);
  EXPECT_TRUE(r1.ok()) << r1.failure();
  const auto r3 = ladder_sum_identities(3);
  EXPECT_TRUE(r3.ok()) << r3.failure();
  EXPECT_EQ(r3.checks[0].direct, 2 * 27);
  const auto r5 = ladder_sum_identities(5);
  EXPECT_TRUE(r5.ok()) << r5.failure();
  EXPECT_GE(r5.checks.size(), 5U);
}

TEST(SumIdentities, HoldUpToHundred) {
  for (std::size_t n = 1; n <= 100; ++n) {
    const auto r = ladder_sum_identities(n);
    ASSERT_TRUE(r.ok()) << r.failure();
  }
}

TEST(SumIdentities, PrintedFirstAuxiliaryIndexIsOffByOne) {
  // sum_{k<=n} f_1(2,k+2) with f(2,n+3) in the closed form fails already at n = 1
  PellPair p;
  EXPECT_EQ(p.pell(3), 5);
  EXPECT_NE(2 * p.pell(3), p.halfcomp(4) - 7);
  EXPECT_EQ(2 * p.pell(3), p.halfcomp(3) - 7);
}
