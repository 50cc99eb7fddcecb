#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "dempoly/errors.hpp"

namespace dempoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Exact conversion; throws if `q` is not an integer or does not fit.
inline std::int64_t to_int64(const Rational& q) {
  if (!is_integral(q)) {
    throw Error("expected an integer, got " + q.str());
  }
  const Integer n = boost::multiprecision::numerator(q);
  if (n > Integer(INT64_MAX) || n < Integer(INT64_MIN)) {
    throw Error("integer out of 64-bit range: " + n.str());
  }
  return n.convert_to<std::int64_t>();
}

inline std::int64_t to_int64(const Integer& n) {
  if (n > Integer(INT64_MAX) || n < Integer(INT64_MIN)) {
    throw Error("integer out of 64-bit range: " + n.str());
  }
  return n.convert_to<std::int64_t>();
}

}  // namespace dempoly
