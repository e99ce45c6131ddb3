#pragma once

#include "collatz/integer.hpp"
#include "collatz/progression.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace collatz {

class InvalidWord : public Error {
 public:
  using Error::Error;
};

/// Affine map from a node-local index j back to the root seed:
/// seed = alpha * j + beta.
///
/// Maps built through compose() always have alpha = 2^k and 0 <= beta < alpha,
/// where k is the number of extractions composed.
struct IndexMap {
  Integer alpha{1};
  Integer beta{0};

  Integer seed_at(const Integer& j) const { return alpha * j + beta; }

  friend bool operator==(const IndexMap&, const IndexMap&) = default;
};

std::string to_string(const IndexMap& m);  // "i=32j+17"

/// Sequence of T1/T2 extractions, stored root first.
///
/// Text form is a string over '1' (T1) and '2' (T2); "21112" is
/// T2 T1 T1 T1 T2.
class OperatorWord {
 public:
  OperatorWord() = default;
  OperatorWord(std::initializer_list<Operator> ops) : ops_(ops) {}
  explicit OperatorWord(std::vector<Operator> ops) : ops_(std::move(ops)) {}

  /// Throws InvalidWord on any character other than '1' and '2'.
  static OperatorWord parse(std::string_view text);

  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }
  Operator operator[](std::size_t t) const { return ops_[t]; }
  auto begin() const noexcept { return ops_.begin(); }
  auto end() const noexcept { return ops_.end(); }

  /// Bit s_t of the word: 1 iff symbol t (0-based here) is T2.
  bool bit(std::size_t t) const { return ops_[t] == Operator::T2; }

  OperatorWord extended(Operator op) const;
  void push_back(Operator op) { ops_.push_back(op); }

  std::string str() const;

  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;

 private:
  std::vector<Operator> ops_;
};

IndexMap identity_map();

/// Substitutes i = 2j + s (s = 0 for T1, 1 for T2) into i = alpha * i' + beta.
IndexMap compose(const IndexMap& m, Operator op);

/// Folds compose() over the word, starting from the identity.
IndexMap compose(const OperatorWord& w);

/// Closed form 2^k j + sum_{t=1..k} s_t 2^(t-1) for the seed reaching index j
/// of the node labelled by w. The root symbol is the least significant bit of
/// the offset: "21" reaches seeds 4j + 1.
Integer seed_from_word(const OperatorWord& w, const Integer& j);

/// All seeds reaching the node labelled by w: S(2^k, sum_t s_t 2^(t-1)).
Progression seed_progression(const OperatorWord& w);

/// Natural density 1/2^k of that seed set.
Rational density(const OperatorWord& w);

}  // namespace collatz
