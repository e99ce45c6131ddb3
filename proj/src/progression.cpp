#include "collatz/progression.hpp"

#include <utility>

namespace collatz {

Progression::Progression(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ < 1) throw InvalidProgression("progression difference must be >= 1, got " + a_.str());
  if (b_ < 0) throw InvalidProgression("progression offset must be >= 0, got " + b_.str());
}

std::string to_string(const Progression& p) {
  return "S(" + p.a().str() + "," + p.b().str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Progression& p) { return os << to_string(p); }

std::string_view to_string(ParityClass c) noexcept {
  switch (c) {
    case ParityClass::AllEven: return "AllEven";
    case ParityClass::AllOdd: return "AllOdd";
    case ParityClass::MixedEvenFirst: return "MixedEvenFirst";
    case ParityClass::MixedOddFirst: return "MixedOddFirst";
  }
  return "?";
}

char to_char(Operator op) noexcept { return op == Operator::T1 ? '1' : '2'; }

Integer value_at(const Progression& p, const Integer& j) { return p.a() * j + p.b(); }

ParityClass classify_parity(const Progression& p) {
  const bool a_even = is_even(p.a());
  const bool b_even = is_even(p.b());
  if (a_even) return b_even ? ParityClass::AllEven : ParityClass::AllOdd;
  return b_even ? ParityClass::MixedEvenFirst : ParityClass::MixedOddFirst;
}

Progression t1(const Progression& p) { return {p.a() * 2, p.b()}; }

Progression t2(const Progression& p) { return {p.a() * 2, p.a() + p.b()}; }

Progression apply(Operator op, const Progression& p) {
  return op == Operator::T1 ? t1(p) : t2(p);
}

ParitySplit split_parity(const Progression& p) {
  switch (classify_parity(p)) {
    case ParityClass::MixedEvenFirst:
      return {{t1(p), Operator::T1}, {t2(p), Operator::T2}};
    case ParityClass::MixedOddFirst:
      return {{t2(p), Operator::T2}, {t1(p), Operator::T1}};
    default:
      throw UniformParity("cannot split " + to_string(p) + ": terms already share one parity");
  }
}

Progression step_even(const Progression& p) {
  if (classify_parity(p) != ParityClass::AllEven)
    throw NotUniformlyEven(to_string(p) + " is not uniformly even");
  return {p.a() / 2, p.b() / 2};
}

Progression step_odd_compact(const Progression& p) {
  if (classify_parity(p) != ParityClass::AllOdd)
    throw NotUniformlyOdd(to_string(p) + " is not uniformly odd");
  return {p.a() * 3 / 2, (p.b() * 3 + 1) / 2};
}

}  // namespace collatz
