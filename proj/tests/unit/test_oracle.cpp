#include <gtest/gtest.h>

#include "bern/error.hpp"
#include "bern/oracle.hpp"

namespace bern {
namespace {

TEST(Recurrence, SmallValues) {
  EXPECT_EQ(bernoulli_recurrence(0), ExactRational(1));
  EXPECT_EQ(bernoulli_recurrence(1), ExactRational::parse("-1/2"));
  EXPECT_EQ(bernoulli_recurrence(2), ExactRational::parse("1/6"));
  EXPECT_EQ(bernoulli_recurrence(3), ExactRational(0));
  EXPECT_EQ(bernoulli_recurrence(4), ExactRational::parse("-1/30"));
  EXPECT_EQ(bernoulli_recurrence(10), ExactRational::parse("5/66"));
  EXPECT_EQ(bernoulli_recurrence(20), ExactRational::parse("-174611/330"));
}

TEST(Recurrence, NinetyEight) {
  EXPECT_EQ(bernoulli_recurrence(98),
            ExactRational::parse(
                "67908260672905495624051117546403605607342195728504487509073961249992947058239/6"));
}

TEST(Recurrence, CeilingEnforced) {
  EXPECT_THROW(bernoulli_recurrence(kOracleCeiling + 2), OracleLimitError);
  EXPECT_THROW(BernoulliTable(kOracleCeiling + 1), OracleLimitError);
}

TEST(BernoulliTable, SelfCheckAndOddZeros) {
  BernoulliTable table(120);
  EXPECT_TRUE(table.self_check());
  for (std::uint64_t i = 3; i <= 120; i += 2) EXPECT_EQ(table[i], ExactRational(0)) << i;
  table.extend_to(200);
  EXPECT_EQ(table.max_index(), 200u);
  EXPECT_TRUE(table.self_check());
  EXPECT_EQ(table[60], ExactRational::parse("-1215233140483755572040304994079820246041491/56786730"));
  table.extend_to(10);
  EXPECT_EQ(table.max_index(), 200u);
}

TEST(BernoulliTable, AgreesWithMemoizedOracle) {
  BernoulliTable table(300);
  for (std::uint64_t i = 0; i <= 300; ++i) ASSERT_EQ(table[i], bernoulli_recurrence(i)) << i;
}

}  // namespace
}  // namespace bern
