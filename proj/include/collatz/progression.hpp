#pragma once

#include "collatz/integer.hpp"

#include <ostream>
#include <string>

namespace collatz {

class InvalidProgression : public Error {
 public:
  using Error::Error;
};
/// split_parity was asked to split a progression whose terms share one parity.
class UniformParity : public Error {
 public:
  using Error::Error;
};
class NotUniformlyEven : public Error {
 public:
  using Error::Error;
};
class NotUniformlyOdd : public Error {
 public:
  using Error::Error;
};

/// The progression S(a, b): the terms a*j + b for j = 0, 1, 2, ...
///
/// The common difference is at least 1 and the offset is nonnegative; both are
/// unbounded. Construction rejects anything else with InvalidProgression.
class Progression {
 public:
  Progression(Integer a, Integer b);

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }

  friend bool operator==(const Progression&, const Progression&) = default;

 private:
  Integer a_;
  Integer b_;
};

std::string to_string(const Progression& p);
std::ostream& operator<<(std::ostream& os, const Progression& p);

/// Parity pattern of the terms of a progression, from (a mod 2, b mod 2).
enum class ParityClass {
  AllEven,         // a even, b even
  AllOdd,          // a even, b odd
  MixedEvenFirst,  // a odd, b even: even terms at even indices
  MixedOddFirst,   // a odd, b odd: even terms at odd indices
};

std::string_view to_string(ParityClass c) noexcept;

/// Index operator: T1 keeps indices j -> 2j, T2 keeps j -> 2j + 1.
enum class Operator { T1, T2 };

char to_char(Operator op) noexcept;  // '1' or '2'

Integer value_at(const Progression& p, const Integer& j);

ParityClass classify_parity(const Progression& p);

/// S(a, b) -> S(2a, b).
Progression t1(const Progression& p);
/// S(a, b) -> S(2a, a + b).
Progression t2(const Progression& p);
Progression apply(Operator op, const Progression& p);

struct TaggedProgression {
  Progression progression;
  Operator op;

  friend bool operator==(const TaggedProgression&, const TaggedProgression&) = default;
};

struct ParitySplit {
  TaggedProgression even;
  TaggedProgression odd;
};

/// Splits a progression with odd difference into its even-valued and
/// odd-valued subsequences. For even b the even terms sit at even indices (T1);
/// for odd b they sit at odd indices (T2). Throws UniformParity when a is even.
ParitySplit split_parity(const Progression& p);

/// Halving step on an all-even progression: S(a, b) -> S(a/2, b/2).
Progression step_even(const Progression& p);

/// Compact odd step (3n + 1)/2 on an all-odd progression:
/// S(a, b) -> S(3a/2, (3b + 1)/2).
Progression step_odd_compact(const Progression& p);

}  // namespace collatz
