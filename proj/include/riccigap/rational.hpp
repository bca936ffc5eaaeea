#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "riccigap/errors.hpp"

namespace riccigap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// "num/den" with den > 0, reduced; integers render as "k/1".
inline std::string to_fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Accepts "p/q", a decimal like "-0.125", or a plain integer. Exact.
Rational parse_rational(const std::string& text);

}  // namespace riccigap
