#include "burst/bounds.hpp"

#include <gtest/gtest.h>

#include <map>

#include "test_support.hpp"

namespace burst {
namespace {

using testing_support::all_words;

struct CountCase {
  std::size_t n, t;
  unsigned q;
};

class BallCount : public ::testing::TestWithParam<CountCase> {};

TEST_P(BallCount, MatchesExhaustiveClassification) {
  const auto [n, t, q] = GetParam();
  std::map<std::size_t, BigInt> observed;
  for (const Word& u : all_words(n, q)) observed[deletion_ball(u, t, false).size()] += 1;
  BigInt total = 0;
  for (std::size_t i = 1; i <= n - t + 1; ++i) {
    EXPECT_EQ(ball_count(n, t, i, q), observed[i]) << "i=" << i;
    total += ball_count(n, t, i, q);
  }
  EXPECT_EQ(total, big_pow(q, n));
  for (const auto& [size, count] : observed) EXPECT_LE(size, n - t + 1);
}

INSTANTIATE_TEST_SUITE_P(Small, BallCount,
                         ::testing::Values(CountCase{4, 2, 2}, CountCase{6, 2, 2}, CountCase{6, 3, 2},
                                           CountCase{6, 2, 3}, CountCase{6, 1, 3}, CountCase{8, 4, 2}));

TEST(BallCount, Values) {
  EXPECT_EQ(ball_count(4, 2, 1, 2), 4);
  EXPECT_EQ(ball_count(4, 2, 2, 2), 8);
  EXPECT_EQ(ball_count(4, 2, 3, 2), 4);
}

TEST(BallCount, RejectsBadArguments) {
  EXPECT_THROW(ball_count(5, 2, 1, 2), InvalidArgument);
  EXPECT_THROW(ball_count(4, 2, 0, 2), InvalidArgument);
  EXPECT_THROW(ball_count(4, 2, 4, 2), InvalidArgument);
  EXPECT_THROW(ball_count(4, 2, 1, 1), InvalidArgument);
}

TEST(LpBound, Values) {
  const BoundReport small = lp_bound(4, 2, 2);
  EXPECT_EQ(small.value, Rational(4));
  EXPECT_EQ(small.floor, 4);
  const BoundReport six = lp_bound(6, 2, 2);
  EXPECT_EQ(six.value, Rational(28, 3));
  EXPECT_EQ(six.floor, 9);
}

TEST(LpBound, ClosedFormEqualsDirectSum) {
  for (unsigned q : {2u, 3u, 4u, 5u})
    for (std::size_t t = 1; t <= 4; ++t)
      for (std::size_t n = 2 * t; n <= 24; n += t) {
        if (n <= t) continue;
        ASSERT_EQ(lp_bound(n, t, q).value, lp_bound_direct(n, t, q)) << n << ' ' << t << ' ' << q;
      }
}

TEST(LpBound, AtLeastOneAndPreconditions) {
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_GE(lp_bound(n, 1, 2).value, 1);
  EXPECT_THROW(lp_bound(2, 2, 2), InvalidArgument);
  EXPECT_THROW(lp_bound(7, 2, 2), InvalidArgument);
}

TEST(PermBound, Values) {
  EXPECT_EQ(perm_bound(5, 2).value, Rational(15));
  EXPECT_EQ(perm_bound(6, 2).value, Rational(72));
  EXPECT_EQ(perm_bound(6, 2).floor, 72);
  EXPECT_EQ(perm_bound(7, 3).value, Rational(5040, 30));
  for (std::size_t n = 2; n <= 10; ++n) EXPECT_EQ(perm_bound(n, 1).value, Rational(big_factorial(n - 1)));
  EXPECT_THROW(perm_bound(2, 2), InvalidArgument);
}

TEST(Log2Of, LargeValues) {
  EXPECT_DOUBLE_EQ(log2_of(BigInt(1024)), 10.0);
  EXPECT_NEAR(log2_of(big_pow(3, 200)), 200 * std::log2(3.0), 1e-9);
}

TEST(RedundancyTable, RowsAndCsv) {
  const std::vector<std::size_t> lengths{16, 32};
  auto rows = redundancy_table(lengths, 4, 2);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows.front().family, "levenshtein");
  EXPECT_EQ(rows.front().formula, "log n + 1");
  EXPECT_DOUBLE_EQ(*rows.front().formula_bits[0], 5.0);
  bool saw_ctb = false;
  for (const TableRow& row : rows) {
    ASSERT_EQ(row.formula_bits.size(), lengths.size());
    if (row.family == "ctb") {
      saw_ctb = true;
      EXPECT_EQ(row.formula, "log n + O(log q log log n)");
    }
  }
  EXPECT_TRUE(saw_ctb);
  const TableRow& lp = rows.back();
  EXPECT_EQ(lp.family, "lp-bound");
  EXPECT_NEAR(*lp.formula_bits[0], 32 - log2_of(lp_bound(16, 2, 4).floor), 1e-9);

  rows.front().measured_bits[1] = 6.25;
  const std::string csv = table_csv(rows, lengths, 4, 2);
  EXPECT_EQ(csv.rfind("# schema_version=1 q=4 t=2\nfamily,alphabet,burst,formula,n,formula_bits,measured_bits\n", 0), 0u);
  EXPECT_NE(csv.find("levenshtein,binary,<=2,\"log n + 1\",16,5.000,\n"), std::string::npos);
  EXPECT_NE(csv.find("levenshtein,binary,<=2,\"log n + 1\",32,6.000,6.250\n"), std::string::npos);
}

}  // namespace
}  // namespace burst
