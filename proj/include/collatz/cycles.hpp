#pragma once

#include "collatz/indexing.hpp"
#include "collatz/integer.hpp"
#include "collatz/progression.hpp"
#include "collatz/tree.hpp"

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace collatz {

/// Snapshot of the node fields the cycle conditions read.
struct CycleEnd {
  NodeId id;
  unsigned depth{0};
  Progression progression{1, 0};
  IndexMap index_map;
  OperatorWord word;
};

CycleEnd cycle_end(const TreeNode& n);

/// A deeper node and a shallower one, t = depth difference >= 1 compact steps
/// apart. In the default scan the shallower node is an ancestor.
struct CyclePair {
  CycleEnd descendant;
  CycleEnd ancestor;
  unsigned t{0};
};

/// Throws std::invalid_argument unless `deeper` is strictly deeper.
CyclePair make_cycle_pair(const TreeNode& deeper, const TreeNode& shallower);

struct UniqueSolution {
  Integer x;
  Integer y;
  friend bool operator==(const UniqueSolution&, const UniqueSolution&) = default;
};
struct NoSolution {
  friend bool operator==(const NoSolution&, const NoSolution&) = default;
};
struct Degenerate {
  friend bool operator==(const Degenerate&, const Degenerate&) = default;
};
using PairOutcome = std::variant<UniqueSolution, NoSolution, Degenerate>;

/// Admissible node-local indices for a solution.
enum class IndexDomain { NonNegative, AllIntegers };

/// Determinant a1*alpha2 - a2*alpha1 of the equal-value / equal-seed system.
Integer determinant(const CyclePair& p);

/// Solves
///   a1 x + b1         = a2 y + b2
///   alpha1 x + beta1  = alpha2 y + beta2
/// in closed form. Unique only for exact integer solutions inside `domain`;
/// NoSolution for fractional or out-of-domain ones; Degenerate when the
/// determinant vanishes.
PairOutcome solve_pair(const CyclePair& p, IndexDomain domain = IndexDomain::NonNegative);

/// Smallest x in [0, bound] with an admissible y solving both equations.
/// Used when the determinant vanishes.
std::optional<UniqueSolution> search_bounded(const CyclePair& p, const Integer& bound,
                                             IndexDomain domain = IndexDomain::NonNegative);

struct CycleSolution {
  CyclePair pair;
  Integer x;
  Integer y;
  Integer value;  // a1 x + b1
  Integer seed;   // alpha1 x + beta1
  bool verified{false};
};

/// Runs the compact oracle from the solution's seed and checks that the value
/// at both node depths equals `value`. False for seeds below 1.
bool verify_solution(const CycleSolution& s);

struct ScanOptions {
  /// Pair every node with every shallower node, not only with its ancestors.
  bool all_pairs{false};
  IndexDomain domain{IndexDomain::NonNegative};
  Integer fallback_bound{1'000'000};
  bool verify{true};
  unsigned workers{0};  // 0: hardware concurrency
};

struct ScanResult {
  std::vector<CycleSolution> solutions;  // sorted by descendant id, t, ancestor id
  std::size_t pairs_examined{0};
  std::size_t degenerate_pairs{0};
  /// Solutions whose common seed is below 1 (the 0 -> 0 fixed point of
  /// halving on the all-T1 path). They are not Collatz seeds and are dropped.
  std::size_t nonpositive_seed_skipped{0};
};

/// Throws DepthLimitExceeded when max_depth exceeds the tree's built depth.
ScanResult scan(const Tree& tree, unsigned max_depth, const ScanOptions& options = {});

}  // namespace collatz
