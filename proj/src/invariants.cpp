#include "collatz/invariants.hpp"

#include "collatz/tree.hpp"

#include <algorithm>

namespace collatz {

bool AllOddReport::invariant_holds() const noexcept { return violations() == 0; }

std::size_t AllOddReport::violations() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(levels.begin(), levels.end(), [](const AllOddLevel& l) { return !l.holds(); }));
}

namespace {

AllOddLevel level_of(const TreeNode& n) {
  AllOddLevel level;
  level.depth = n.depth;
  level.progression = n.progression;
  level.index_map = n.index_map;
  level.a_odd = is_odd(n.progression.a());
  level.b_is_a_minus_one = n.progression.b() == n.progression.a() - 1;
  level.used_t2 = n.word.empty() || n.word[n.word.size() - 1] == Operator::T2;
  return level;
}

}  // namespace

AllOddReport all_odd_path(unsigned k) {
  AllOddReport report;
  report.depth = k;
  report.levels.reserve(k + 1);

  TreeNode n = root_node();
  report.levels.push_back(level_of(n));
  for (unsigned d = 0; d < k; ++d) {
    n = expand_branch(n, Branch::OddParent);
    report.levels.push_back(level_of(n));
  }
  report.min_seed = n.index_map.beta;
  return report;
}

bool lemma_step_check(const Integer& a) {
  if (is_even(a) || a < 1) throw NotOdd("lemma step needs odd a >= 1, got " + a.str());
  const Progression next = step_odd_compact(t2(Progression{a, a - 1}));
  const Integer expected = a * 3;
  return next == Progression{expected, expected - 1} && is_odd(next.a());
}

Integer min_seed_growth(unsigned k) {
  return seed_from_word(OperatorWord(std::vector<Operator>(k, Operator::T2)), 0);
}

}  // namespace collatz
