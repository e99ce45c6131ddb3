#pragma once

#include "collatz/integer.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace collatz {

/// Concrete Collatz iteration on big integers. Everything symbolic is checked
/// against this.

class ZeroInput : public Error {
 public:
  using Error::Error;
};

enum class StepVariant { Full, Compact };

/// n/2 for even n, 3n + 1 for odd n. Throws ZeroInput for n < 1.
Integer step_full(const Integer& n);

/// n/2 for even n, (3n + 1)/2 for odd n. Throws ZeroInput for n < 1.
Integer step_compact(const Integer& n);

struct Trajectory {
  Integer seed;
  std::vector<Integer> steps;  // steps[0] == seed, then one entry per step
  StepVariant variant{StepVariant::Compact};

  std::size_t step_count() const noexcept { return steps.empty() ? 0 : steps.size() - 1; }
};

/// Exactly `count` steps from `seed`. Does not stop at 1.
Trajectory run(const Integer& seed, std::size_t count, StepVariant variant);

struct ValueRepeat {
  std::size_t first;
  std::size_t second;
  Integer value;
};

/// Earliest pair of positions (by second index, then first) holding equal values.
std::optional<ValueRepeat> detect_value_repeat(const Trajectory& t);

}  // namespace collatz
