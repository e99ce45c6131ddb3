#include "collatz/indexing.hpp"

namespace collatz {

std::string to_string(const IndexMap& m) {
  std::string out = "i=";
  if (m.alpha != 1) out += m.alpha.str();
  out += "j";
  if (m.beta != 0) out += "+" + m.beta.str();
  return out;
}

OperatorWord OperatorWord::parse(std::string_view text) {
  std::vector<Operator> ops;
  ops.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '1': ops.push_back(Operator::T1); break;
      case '2': ops.push_back(Operator::T2); break;
      default:
        throw InvalidWord("operator words use only '1' and '2', got '" + std::string(text) + "'");
    }
  }
  return OperatorWord(std::move(ops));
}

OperatorWord OperatorWord::extended(Operator op) const {
  OperatorWord out = *this;
  out.ops_.push_back(op);
  return out;
}

std::string OperatorWord::str() const {
  std::string out;
  out.reserve(ops_.size());
  for (Operator op : ops_) out.push_back(to_char(op));
  return out;
}

IndexMap identity_map() { return {}; }

IndexMap compose(const IndexMap& m, Operator op) {
  IndexMap out{m.alpha * 2, m.beta};
  if (op == Operator::T2) out.beta += m.alpha;
  return out;
}

IndexMap compose(const OperatorWord& w) {
  IndexMap m = identity_map();
  for (Operator op : w) m = compose(m, op);
  return m;
}

namespace {

// The first extraction splits the seeds by their lowest bit, so symbol t
// (root first, 0-based) carries weight 2^t.
Integer word_offset(const OperatorWord& w) {
  Integer sum = 0;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w.bit(t)) boost::multiprecision::bit_set(sum, static_cast<unsigned>(t));
  }
  return sum;
}

}  // namespace

Integer seed_from_word(const OperatorWord& w, const Integer& j) {
  return (j << static_cast<unsigned>(w.size())) + word_offset(w);
}

Progression seed_progression(const OperatorWord& w) {
  return {pow2(static_cast<unsigned>(w.size())), word_offset(w)};
}

Rational density(const OperatorWord& w) {
  return Rational(Integer(1), pow2(static_cast<unsigned>(w.size())));
}

}  // namespace collatz
