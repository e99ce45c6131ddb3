#include "collatz/oracle.hpp"

#include <map>

namespace collatz {

namespace {

void require_positive(const Integer& n) {
  if (n < 1) throw ZeroInput("Collatz oracle requires n >= 1, got " + n.str());
}

}  // namespace

Integer step_full(const Integer& n) {
  require_positive(n);
  return is_even(n) ? Integer(n >> 1) : Integer(n * 3 + 1);
}

Integer step_compact(const Integer& n) {
  require_positive(n);
  return is_even(n) ? Integer(n >> 1) : Integer((n * 3 + 1) >> 1);
}

Trajectory run(const Integer& seed, std::size_t count, StepVariant variant) {
  require_positive(seed);
  Trajectory t{seed, {}, variant};
  t.steps.reserve(count + 1);
  t.steps.push_back(seed);
  for (std::size_t s = 0; s < count; ++s) {
    const Integer& n = t.steps.back();
    t.steps.push_back(variant == StepVariant::Compact ? step_compact(n) : step_full(n));
  }
  return t;
}

std::optional<ValueRepeat> detect_value_repeat(const Trajectory& t) {
  std::map<Integer, std::size_t> seen;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    auto [it, inserted] = seen.emplace(t.steps[i], i);
    if (!inserted) return ValueRepeat{it->second, i, t.steps[i]};
  }
  return std::nullopt;
}

}  // namespace collatz
