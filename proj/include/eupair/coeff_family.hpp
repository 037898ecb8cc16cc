#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eupair/int_poly.hpp"
#include "eupair/numeric.hpp"

namespace eupair {

// Coefficient that depends affinely on the recurrence index: c0 + c1*n.
struct AffineCoeff {
  Int c0, c1;

  Int at(const Int& n) const { return c0 + c1 * n; }
  bool is_zero() const { return c0 == 0 && c1 == 0; }
  friend bool operator==(const AffineCoeff&, const AffineCoeff&) = default;
};

// Polynomial in x whose coefficient of x^k is affine in n. Instantiating
// at a concrete n yields an IntPoly; the family itself is the symbolic
// object recurrences are written in.
class CoeffFamily {
 public:
  CoeffFamily() = default;
  explicit CoeffFamily(std::vector<AffineCoeff> terms) : terms_(std::move(terms)) { normalize(); }

  static CoeffFamily from_poly(const IntPoly& constant_part);
  // Single term (c0 + c1*n) * x^k.
  static CoeffFamily term(Int c0, Int c1, std::size_t k);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const AffineCoeff& term(std::size_t k) const;
  const std::vector<AffineCoeff>& terms() const { return terms_; }

  IntPoly instantiate(const Int& n) const;

  CoeffFamily& operator+=(const CoeffFamily& o);
  friend CoeffFamily operator+(CoeffFamily a, const CoeffFamily& b) { return a += b; }
  friend bool operator==(const CoeffFamily&, const CoeffFamily&) = default;

 private:
  void normalize();
  std::vector<AffineCoeff> terms_;
};

CoeffFamily scale(const Int& s, const CoeffFamily& f);
// f * x^k
CoeffFamily shift_up(const CoeffFamily& f, std::size_t k);

// Compressed even/odd split by x-exponent parity, mirroring hb_split:
// f(x) = even(x^2) + x * odd(x^2) holds per instantiated n.
struct FamilyPair {
  CoeffFamily e, o;
  friend bool operator==(const FamilyPair&, const FamilyPair&) = default;
};
FamilyPair family_split(const CoeffFamily& f);

// Canonical expression text, ascending in x, e.g. "1 + x + 2*n*x^2".
std::string to_string(const CoeffFamily& f);

}  // namespace eupair
