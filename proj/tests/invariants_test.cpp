#include "collatz/invariants.hpp"

#include "support/brute_force.hpp"

#include <gtest/gtest.h>

namespace collatz {
namespace {

TEST(AllOddPath, ShallowLevels) {
  const AllOddReport r0 = all_odd_path(0);
  ASSERT_EQ(r0.levels.size(), 1u);
  EXPECT_EQ(r0.levels[0].progression, Progression(1, 0));
  EXPECT_EQ(r0.levels[0].index_map, identity_map());
  EXPECT_TRUE(r0.invariant_holds());

  const AllOddReport r2 = all_odd_path(2);
  ASSERT_EQ(r2.levels.size(), 3u);
  EXPECT_EQ(r2.levels[1].progression, Progression(3, 2));
  EXPECT_EQ(r2.levels[1].index_map, (IndexMap{2, 1}));
  EXPECT_EQ(r2.levels[2].progression, Progression(9, 8));
  EXPECT_EQ(r2.levels[2].index_map, (IndexMap{4, 3}));
  EXPECT_EQ(r2.min_seed, 3);
}

TEST(AllOddPath, ClosedFormsToDepth64) {
  const AllOddReport r = all_odd_path(64);
  EXPECT_EQ(r.violations(), 0u);
  for (const AllOddLevel& l : r.levels) {
    ASSERT_EQ(l.progression.a(), pow3(l.depth));
    ASSERT_EQ(l.progression.b(), pow3(l.depth) - 1);
    ASSERT_EQ(l.index_map.alpha, pow2(l.depth));
    ASSERT_EQ(l.index_map.beta, pow2(l.depth) - 1);
  }
  EXPECT_EQ(r.min_seed, pow2(64) - 1);
}

TEST(LemmaStep, Goldens) {
  EXPECT_TRUE(lemma_step_check(1));
  EXPECT_TRUE(lemma_step_check(3));
  EXPECT_TRUE(lemma_step_check(9));
  EXPECT_TRUE(lemma_step_check(pow3(100)));
  EXPECT_THROW(lemma_step_check(4), NotOdd);
  EXPECT_THROW(lemma_step_check(0), NotOdd);
}

TEST(LemmaStep, HoldsForEveryOddA) {
  for (int a = 1; a < 2001; a += 2) ASSERT_TRUE(lemma_step_check(a)) << a;
}

TEST(MinSeedGrowth, Values) {
  EXPECT_EQ(min_seed_growth(0), 0);
  EXPECT_EQ(min_seed_growth(3), 7);
  EXPECT_EQ(min_seed_growth(5), 31);
  EXPECT_EQ(min_seed_growth(64), pow2(64) - 1);
}

TEST(MinSeedGrowth, IsTheSmallestSeedWithKOddSteps) {
  for (unsigned k = 1; k <= 16; ++k) {
    std::uint64_t smallest = 0;
    for (std::uint64_t s = 1; s <= (std::uint64_t{1} << k); ++s) {
      if (testing::leading_odd_steps(s, k) == k) {
        smallest = s;
        break;
      }
    }
    ASSERT_EQ(min_seed_growth(k), smallest) << "k=" << k;
  }
}

}  // namespace
}  // namespace collatz
