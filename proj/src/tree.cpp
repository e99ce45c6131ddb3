#include "collatz/tree.hpp"

#include <limits>
#include <stdexcept>

namespace collatz {

std::string_view to_string(Branch b) noexcept {
  return b == Branch::EvenParent ? "even" : "odd";
}

TreeNode root_node() { return TreeNode{}; }

TreeNode expand_branch(const TreeNode& n, Branch branch) {
  const ParitySplit split = split_parity(n.progression);
  const TaggedProgression& extracted =
      branch == Branch::EvenParent ? split.even : split.odd;

  TreeNode child;
  child.parent = n.id;
  child.depth = n.depth + 1;
  child.progression = branch == Branch::EvenParent ? step_even(extracted.progression)
                                                   : step_odd_compact(extracted.progression);
  child.index_map = compose(n.index_map, extracted.op);
  child.word = n.word.extended(extracted.op);
  child.branch = branch;
  child.intermediate = extracted.progression;
  return child;
}

ChildPair expand_node(const TreeNode& n) {
  return {expand_branch(n, Branch::EvenParent), expand_branch(n, Branch::OddParent)};
}

namespace {

// Branch taken by `op` out of a node: T1 keeps even indices, which are the
// even terms iff b is even.
Branch branch_of(const TreeNode& n, Operator op) {
  const bool t1_is_even = is_even(n.progression.b());
  return (op == Operator::T1) == t1_is_even ? Branch::EvenParent : Branch::OddParent;
}

}  // namespace

TreeNode walk(const OperatorWord& w) {
  TreeNode n = root_node();
  for (Operator op : w) n = expand_branch(n, branch_of(n, op));
  return n;
}

OperatorWord word_from_branches(std::string_view branches) {
  TreeNode n = root_node();
  for (char c : branches) {
    if (c != 'e' && c != 'o')
      throw InvalidWord("branch words use only 'e' and 'o', got '" + std::string(branches) + "'");
    n = expand_branch(n, c == 'e' ? Branch::EvenParent : Branch::OddParent);
  }
  return n.word;
}

std::span<const TreeNode> Tree::level(unsigned d) const {
  if (d > depth_) throw NotFound("level " + std::to_string(d) + " beyond built depth");
  const std::size_t first = (std::size_t{1} << d) - 1;
  return std::span<const TreeNode>(nodes_).subspan(first, std::size_t{1} << d);
}

std::optional<std::pair<NodeId, NodeId>> Tree::children(NodeId id) const {
  return children_.at(id.value);
}

std::vector<NodeId> Tree::ancestors(NodeId id) const {
  std::vector<NodeId> out;
  for (auto p = node(id).parent; p; p = node(*p).parent) out.push_back(*p);
  return out;
}

std::string Tree::branch_word(NodeId id) const {
  std::string out(node(id).depth, '?');
  for (const TreeNode* n = &node(id); n->branch; n = &node(*n->parent))
    out[n->depth - 1] = *n->branch == Branch::EvenParent ? 'e' : 'o';
  return out;
}

Tree build(unsigned depth, unsigned depth_limit) {
  if (depth > depth_limit) {
    throw DepthLimitExceeded("depth " + std::to_string(depth) + " exceeds limit " +
                             std::to_string(depth_limit));
  }
  if (depth + 1 >= std::numeric_limits<std::size_t>::digits)
    throw DepthLimitExceeded("depth " + std::to_string(depth) + " is not addressable");

  const std::size_t total = (std::size_t{2} << depth) - 1;
  Tree tree;
  tree.depth_ = depth;
  tree.nodes_.reserve(total);
  tree.children_.assign(total, std::nullopt);
  tree.nodes_.push_back(root_node());

  const std::size_t interior = (std::size_t{1} << depth) - 1;
  for (std::size_t k = 0; k < interior; ++k) {
    ChildPair kids = expand_node(tree.nodes_[k]);
    const NodeId even{tree.nodes_.size()};
    const NodeId odd{even.value + 1};
    kids.even.id = even;
    kids.odd.id = odd;
    tree.nodes_.push_back(std::move(kids.even));
    tree.nodes_.push_back(std::move(kids.odd));
    tree.children_[k] = std::pair{even, odd};
  }
  return tree;
}

const TreeNode& node_at(const Tree& tree, const OperatorWord& w) {
  if (w.size() > tree.depth()) {
    throw NotFound("word '" + w.str() + "' is longer than the built depth " +
                   std::to_string(tree.depth()));
  }
  const TreeNode* n = &tree.root();
  for (Operator op : w) {
    const auto kids = tree.children(n->id);
    n = &tree.node(branch_of(*n, op) == Branch::EvenParent ? kids->first : kids->second);
  }
  return *n;
}

}  // namespace collatz
