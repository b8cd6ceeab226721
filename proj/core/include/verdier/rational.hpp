#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace verdier {

// Exact arbitrary-precision rational coefficient type. Every class
// computation in this library is exact; nothing is ever rounded.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace verdier
