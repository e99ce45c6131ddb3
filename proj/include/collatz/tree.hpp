#pragma once

#include "collatz/indexing.hpp"
#include "collatz/progression.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace collatz {

class DepthLimitExceeded : public Error {
 public:
  using Error::Error;
};
class NotFound : public Error {
 public:
  using Error::Error;
};

struct NodeId {
  std::size_t value{0};
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

/// Which Collatz branch produced a node. Differs from the node's last operator
/// whenever the parent's offset b is odd.
enum class Branch { EvenParent, OddParent };

std::string_view to_string(Branch b) noexcept;  // "even" / "odd"

/// One node of the symbolic possibility tree.
///
/// `progression` is the form of the value after `depth` compact steps for every
/// seed `index_map.seed_at(j)`. `word` is the extraction history, so
/// index_map == compose(word). `intermediate` is the post-extraction progression
/// before the Collatz step (absent at the root).
struct TreeNode {
  NodeId id;
  std::optional<NodeId> parent;
  unsigned depth{0};
  Progression progression{1, 0};
  IndexMap index_map;
  OperatorWord word;
  std::optional<Branch> branch;
  std::optional<Progression> intermediate;
};

TreeNode root_node();

struct ChildPair {
  TreeNode even;
  TreeNode odd;
};

/// Parity split of the node followed by the matching compact step on each
/// branch. Children carry parent = n.id; their own ids are assigned by build().
ChildPair expand_node(const TreeNode& n);

/// Single child of `n` along one Collatz branch.
TreeNode expand_branch(const TreeNode& n, Branch branch);

/// Descends from the root along an operator word without materialising the
/// tree. Works for any word length. The returned node's id is not meaningful.
TreeNode walk(const OperatorWord& w);

/// Converts an even/odd branch word ('e'/'o') into the operator word of the
/// same path. Throws InvalidWord on other characters.
OperatorWord word_from_branches(std::string_view branches);

inline constexpr unsigned kDefaultDepthLimit = 24;

/// Complete binary tree of compact-step forms, ids assigned breadth first with
/// the even child before the odd child. Node k has children 2k+1 and 2k+2.
class Tree {
 public:
  unsigned depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  const TreeNode& node(NodeId id) const { return nodes_.at(id.value); }
  const TreeNode& root() const { return nodes_.front(); }
  std::span<const TreeNode> nodes() const noexcept { return nodes_; }

  /// The 2^d nodes at depth d, in id order.
  std::span<const TreeNode> level(unsigned d) const;

  /// (even child, odd child), or nullopt for leaves.
  std::optional<std::pair<NodeId, NodeId>> children(NodeId id) const;

  /// Proper ancestors of `id`, nearest first.
  std::vector<NodeId> ancestors(NodeId id) const;

  /// 'e'/'o' branch letters along the root path of `id`.
  std::string branch_word(NodeId id) const;

 private:
  friend Tree build(unsigned depth, unsigned depth_limit);

  unsigned depth_{0};
  std::vector<TreeNode> nodes_;
  std::vector<std::optional<std::pair<NodeId, NodeId>>> children_;
};

/// Throws DepthLimitExceeded when depth > depth_limit.
Tree build(unsigned depth, unsigned depth_limit = kDefaultDepthLimit);

/// Node carrying exactly this operator word. Throws NotFound when the word is
/// longer than the built depth.
const TreeNode& node_at(const Tree& tree, const OperatorWord& w);

}  // namespace collatz
