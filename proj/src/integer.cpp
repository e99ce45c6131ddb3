#include "collatz/integer.hpp"

#include <algorithm>
#include <cctype>

namespace collatz {

std::string to_decimal(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  Integer value{std::string(digits)};
  return negative ? Integer(-value) : value;
}

}  // namespace collatz
