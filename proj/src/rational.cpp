#include "riccigap/rational.hpp"

#include <algorithm>
#include <cctype>

namespace riccigap {
namespace {

/// Strict base-10 integer parse; cpp_int's own string constructor treats a
/// leading zero as octal, which is never wanted here.
BigInt parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw InputError("not a rational number: '" + text + "'");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw InputError("not a rational number: '" + text + "'");
    }
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw InputError("not a rational number: '" + text + "'");

  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const BigInt num = parse_decimal(s.substr(0, slash));
    const BigInt den = parse_decimal(s.substr(slash + 1));
    if (den == 0) throw InputError("not a rational number: '" + text + "'");
    return Rational(num, den);
  }
  const auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(parse_decimal(s));
  const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  BigInt den = 1;
  for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  return Rational(parse_decimal(digits), den);
}

}  // namespace riccigap
