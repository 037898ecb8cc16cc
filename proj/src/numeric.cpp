#include "eupair/numeric.hpp"

#include <stdexcept>

namespace eupair {

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

Int factorial(unsigned n) {
  Int result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

Int ipow(const Int& base, unsigned exp) {
  Int result = 1;
  Int b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp != 0) b *= b;
  }
  return result;
}

Rat rpow(const Rat& base, unsigned exp) {
  Rat result = 1;
  Rat b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp != 0) b *= b;
  }
  return result;
}

}  // namespace eupair
