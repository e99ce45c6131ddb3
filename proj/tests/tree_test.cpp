#include "collatz/tree.hpp"

#include "collatz/oracle.hpp"
#include "support/brute_force.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace collatz {
namespace {

TEST(ExpandNode, Root) {
  const ChildPair kids = expand_node(root_node());
  EXPECT_EQ(kids.even.progression, Progression(1, 0));
  EXPECT_EQ(kids.even.word.str(), "1");
  EXPECT_EQ(kids.even.intermediate, Progression(2, 0));
  EXPECT_EQ(kids.even.branch, Branch::EvenParent);
  EXPECT_EQ(kids.odd.progression, Progression(3, 2));
  EXPECT_EQ(kids.odd.word.str(), "2");
  EXPECT_EQ(kids.odd.intermediate, Progression(2, 1));
  EXPECT_EQ(kids.odd.branch, Branch::OddParent);
  EXPECT_EQ(kids.odd.index_map, (IndexMap{2, 1}));
  EXPECT_EQ(kids.odd.depth, 1u);
}

TEST(ExpandNode, SecondAndThirdLevel) {
  const TreeNode s32 = expand_node(root_node()).odd;
  const ChildPair kids = expand_node(s32);
  EXPECT_EQ(kids.even.progression, Progression(3, 1));
  EXPECT_EQ(kids.even.word.str(), "21");
  EXPECT_EQ(kids.odd.progression, Progression(9, 8));
  EXPECT_EQ(kids.odd.word.str(), "22");
  EXPECT_EQ(kids.odd.progression.b(), kids.odd.progression.a() - 1);

  // Odd offset: the even branch is now extracted with T2.
  const ChildPair next = expand_node(kids.even);
  EXPECT_EQ(next.even.progression, Progression(3, 2));
  EXPECT_EQ(next.even.word.str(), "212");
  EXPECT_EQ(next.even.intermediate, Progression(6, 4));
  EXPECT_EQ(next.odd.progression, Progression(9, 2));
  EXPECT_EQ(next.odd.word.str(), "211");
  EXPECT_EQ(next.odd.index_map, (IndexMap{8, 1}));
}

TEST(Build, SmallTrees) {
  const Tree t0 = build(0);
  ASSERT_EQ(t0.size(), 1u);
  EXPECT_EQ(t0.root().progression, Progression(1, 0));
  EXPECT_FALSE(t0.root().parent);
  EXPECT_FALSE(t0.children(t0.root().id));

  const Tree t1 = build(1);
  ASSERT_EQ(t1.size(), 3u);
  EXPECT_EQ(t1.level(1)[0].progression, Progression(1, 0));
  EXPECT_EQ(t1.level(1)[1].progression, Progression(3, 2));
  EXPECT_NE(t1.level(1)[0].id, t1.root().id);  // stored as a separate node

  const Tree t3 = build(3);
  ASSERT_EQ(t3.size(), 15u);
  std::set<Integer> betas;
  for (const TreeNode& n : t3.level(3)) betas.insert(n.index_map.beta);
  EXPECT_EQ(betas, (std::set<Integer>{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(Build, DepthLimit) {
  EXPECT_THROW(build(25), DepthLimitExceeded);
  EXPECT_THROW(build(5, 4), DepthLimitExceeded);
  EXPECT_NO_THROW(build(4, 4));
}

TEST(Build, StructureAndIds) {
  const Tree tree = build(6);
  for (const TreeNode& n : tree.nodes()) {
    const auto kids = tree.children(n.id);
    if (n.depth == tree.depth()) {
      EXPECT_FALSE(kids);
      continue;
    }
    ASSERT_TRUE(kids);
    EXPECT_EQ(kids->first.value, 2 * n.id.value + 1);
    EXPECT_EQ(kids->second.value, 2 * n.id.value + 2);
    EXPECT_EQ(tree.node(kids->first).branch, Branch::EvenParent);
    EXPECT_EQ(tree.node(kids->second).branch, Branch::OddParent);
    EXPECT_EQ(tree.node(kids->first).parent, n.id);
  }
  for (unsigned d = 0; d <= tree.depth(); ++d) EXPECT_EQ(tree.level(d).size(), std::size_t{1} << d);
}

TEST(Build, NodeInvariantsToDepth12) {
  const Tree tree = build(12);
  for (unsigned d = 0; d <= 12; ++d) {
    std::vector<Integer> betas;
    std::set<std::string> words;
    for (const TreeNode& n : tree.level(d)) {
      ASSERT_TRUE(is_odd(n.progression.a())) << n.word.str();
      ASSERT_EQ(n.word.size(), n.depth);
      ASSERT_EQ(n.index_map, compose(n.word));
      ASSERT_EQ(n.index_map.seed_at(3), seed_from_word(n.word, 3));
      betas.push_back(n.index_map.beta);
      words.insert(n.word.str());
    }
    std::sort(betas.begin(), betas.end());
    for (std::size_t k = 0; k < betas.size(); ++k) ASSERT_EQ(betas[k], k);
    EXPECT_EQ(words.size(), std::size_t{1} << d);
  }
}

TEST(Build, NodeFormsMatchOracle) {
  const Tree tree = build(12);
  std::uniform_int_distribution<std::size_t> pick(0, tree.size() - 1);
  std::uniform_int_distribution<int> pick_j(0, 50);
  int checked = 0;
  while (checked < 200) {
    const TreeNode& n = tree.nodes()[pick(testing::rng())];
    const Integer j = pick_j(testing::rng());
    const Integer seed = n.index_map.seed_at(j);
    if (seed == 0) continue;  // the oracle rejects 0; 0 stays 0 under halving
    const Trajectory t = run(seed, n.depth, StepVariant::Compact);
    ASSERT_EQ(t.steps.back(), value_at(n.progression, j)) << n.word.str() << " j=" << j;
    ++checked;
  }
}

TEST(Build, BranchWordsMatchSeedParity) {
  const Tree tree = build(8);
  for (const TreeNode& n : tree.level(8)) {
    const auto beta = static_cast<std::uint64_t>(n.index_map.beta);
    EXPECT_EQ(tree.branch_word(n.id), testing::branch_word_of_seed(beta, 8));
  }
}

TEST(NodeAt, LooksUpByOperatorWord) {
  const Tree tree = build(5);
  const TreeNode& ex2 = node_at(tree, OperatorWord::parse("21112"));
  EXPECT_EQ(ex2.progression, Progression(9, 5));
  EXPECT_EQ(ex2.index_map, (IndexMap{32, 17}));
  EXPECT_EQ(node_at(tree, OperatorWord{}).id, tree.root().id);
  const TreeNode& s98 = node_at(tree, OperatorWord::parse("22"));
  EXPECT_EQ(s98.progression, Progression(9, 8));
  EXPECT_EQ(s98.index_map, (IndexMap{4, 3}));
  EXPECT_THROW(node_at(tree, OperatorWord::parse("222222")), NotFound);

  for (const TreeNode& n : tree.nodes()) EXPECT_EQ(node_at(tree, n.word).id, n.id);
}

TEST(Walk, AgreesWithBuiltTree) {
  const Tree tree = build(7);
  for (const TreeNode& n : tree.nodes()) {
    const TreeNode w = walk(n.word);
    ASSERT_EQ(w.progression, n.progression);
    ASSERT_EQ(w.index_map, n.index_map);
    ASSERT_EQ(w.branch, n.branch);
  }
}

TEST(Walk, SeedsOfEveryWordFollowItsPath) {
  for (unsigned k = 0; k <= 8; ++k) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
      OperatorWord w;
      for (unsigned t = 0; t < k; ++t) w.push_back((bits >> t) & 1 ? Operator::T2 : Operator::T1);
      const Progression seeds = seed_progression(w);
      for (std::uint64_t j = 0; j < 6; ++j) {
        const auto seed = static_cast<std::uint64_t>(value_at(seeds, j));
        ASSERT_EQ(word_from_branches(testing::branch_word_of_seed(seed, k)), w)
            << "seed " << seed;
      }
    }
  }
}

TEST(Walk, BranchWordConversion) {
  // Example path: odd, even, odd, even, even.
  EXPECT_EQ(word_from_branches("oeoee").str(), "21112");
  EXPECT_EQ(word_from_branches("").str(), "");
  EXPECT_EQ(word_from_branches("ooooo").str(), "22222");
  EXPECT_THROW(word_from_branches("oex"), InvalidWord);

  const Tree tree = build(6);
  for (const TreeNode& n : tree.nodes())
    EXPECT_EQ(word_from_branches(tree.branch_word(n.id)), n.word);
}

}  // namespace
}  // namespace collatz
