#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace collatz {

/// Unbounded exact integer. Every progression component, index and seed uses it.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational (used for seed densities).
using Rational = boost::multiprecision::cpp_rational;

/// Base for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 2^k as an exact integer.
inline Integer pow2(unsigned k) { return Integer(1) << k; }

/// 3^k as an exact integer.
inline Integer pow3(unsigned k) { return boost::multiprecision::pow(Integer(3), k); }

inline bool is_even(const Integer& n) { return !boost::multiprecision::bit_test(n, 0); }
inline bool is_odd(const Integer& n) { return boost::multiprecision::bit_test(n, 0); }

inline std::string to_decimal(const Integer& n) { return n.str(); }

std::string to_decimal(const Rational& q);

/// Parses an optionally signed decimal literal. Throws std::invalid_argument on
/// anything else (empty input, stray characters, whitespace).
Integer parse_integer(std::string_view text);

}  // namespace collatz
