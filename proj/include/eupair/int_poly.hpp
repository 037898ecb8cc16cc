#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eupair/numeric.hpp"

namespace eupair {

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// The coefficient vector is always normalized: no trailing zeros, and the
// zero polynomial stores no coefficients at all, so its degree is "none".
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  IntPoly(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { normalize(); }

  static IntPoly constant(Int c);
  static IntPoly monomial(Int c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  // Coefficient of x^k; zero beyond the stored range.
  const Int& coeff(std::size_t k) const;
  const Int& leading() const;  // throws on the zero polynomial

  IntPoly derivative() const;
  Int operator()(const Int& t) const;
  Rat operator()(const Rat& t) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o) { *this = *this * o; return *this; }
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

IntPoly operator*(const Int& s, const IntPoly& f);

// f(x) * x^k
IntPoly shift_up(const IntPoly& f, std::size_t k);

// x^n * f(1/x): coefficient reversal inside a window of size n+1.
// Throws std::invalid_argument when n < deg f (the result would not be a
// polynomial).
IntPoly reverse(const IntPoly& f, std::size_t n);

// f(-x): odd-exponent coefficients negated.
IntPoly substitute_neg(const IntPoly& f);

struct PolyPair {
  IntPoly e, o;
  friend bool operator==(const PolyPair&, const PolyPair&) = default;
};

// Compressed even/odd decomposition: f(x) = e(x^2) + x * o(x^2).
PolyPair hb_split(const IntPoly& f);
// Inverse of hb_split: e(x^2) + x * o(x^2).
IntPoly hb_join(const IntPoly& e, const IntPoly& o);
// Uncompressed parts: f = f^e + f^o with f^e holding the even-exponent
// terms of f and f^o the odd-exponent terms (both still in x).
PolyPair even_odd_uncompressed(const IntPoly& f);

// Thrown by exact_div when the division leaves a remainder; carries it.
class ExactDivisionError : public std::runtime_error {
 public:
  ExactDivisionError(std::string message, IntPoly remainder);
  const IntPoly& remainder() const { return remainder_; }

 private:
  IntPoly remainder_;
};

// f / g for polynomial g dividing f exactly over the integers.
IntPoly exact_div(const IntPoly& f, const IntPoly& g);

IntPoly pow(const IntPoly& f, unsigned k);

// Canonical text form "c0 + c1*x + c2*x^2 + ...": every coefficient from
// exponent 0 through the degree printed as an exact decimal integer
// (including zeros and signs); the zero polynomial prints as "0".
std::string to_string(const IntPoly& f);
// Parses the canonical text form (tolerating omitted zero terms, elided
// unit coefficients and binary minus).
IntPoly poly_from_string(const std::string& text);

// JSON form: array of decimal strings indexed by exponent.
std::vector<std::string> to_decimal_coeffs(const IntPoly& f);
IntPoly poly_from_decimal_coeffs(const std::vector<std::string>& coeffs);

}  // namespace eupair
