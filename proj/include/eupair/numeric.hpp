#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace eupair {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational kept in lowest terms with a
// positive denominator (the backend maintains that canonical form).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int binomial(unsigned n, unsigned k);
Int factorial(unsigned n);

// base^exp for integer base, exp >= 0.
Int ipow(const Int& base, unsigned exp);
Rat rpow(const Rat& base, unsigned exp);

inline int sign(const Int& v) { return v.sign(); }
inline int sign(const Rat& v) { return v.sign(); }

}  // namespace eupair
