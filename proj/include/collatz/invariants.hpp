#pragma once

#include "collatz/indexing.hpp"
#include "collatz/integer.hpp"
#include "collatz/progression.hpp"

#include <vector>

namespace collatz {

class NotOdd : public Error {
 public:
  using Error::Error;
};

/// State of the all-odd path after `depth` odd compact steps.
struct AllOddLevel {
  unsigned depth{0};
  Progression progression{1, 0};
  IndexMap index_map;
  bool a_odd{true};
  bool b_is_a_minus_one{true};
  bool used_t2{true};  // extraction was T2 (vacuously true at the root)

  bool holds() const noexcept { return a_odd && b_is_a_minus_one && used_t2; }
};

struct AllOddReport {
  unsigned depth{0};
  std::vector<AllOddLevel> levels;  // depth + 1 entries, root first
  Integer min_seed{0};              // index_map.beta at the deepest level

  bool invariant_holds() const noexcept;
  std::size_t violations() const noexcept;
};

/// Walks the odd branch k times from S(1, 0), checking at every level that a
/// is odd, b = a - 1 and the extraction used T2.
AllOddReport all_odd_path(unsigned k);

/// One induction step on S(a, a - 1): T2 then the compact odd step must land on
/// S(3a, 3a - 1). Throws NotOdd for even a.
bool lemma_step_check(const Integer& a);

/// 2^k - 1: the smallest seed whose first k compact steps all take the odd branch.
Integer min_seed_growth(unsigned k);

}  // namespace collatz
