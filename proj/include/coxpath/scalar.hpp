#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace coxpath {

/* Exact coefficient arithmetic. Everything downstream stores Rational and
 * carries a Domain tag; integer mode is a promise checked after reduction,
 * not a separate implementation. */
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Domain { Integers, Rationals };

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

} // namespace coxpath
