#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eupair/int_poly.hpp"
#include "eupair/numeric.hpp"

namespace eupair {

// Dense univariate polynomial with exact rational coefficients. Each
// coefficient is kept in lowest terms with a positive denominator (the
// rational backend canonicalizes); the coefficient vector carries no
// trailing zeros.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  RatPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit RatPoly(const IntPoly& f);

  static RatPoly constant(Rat c);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& coeff(std::size_t k) const;
  const Rat& leading() const;

  RatPoly derivative() const;
  Rat operator()(const Rat& t) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o) { *this = *this * o; return *this; }
  RatPoly operator-() const;

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

RatPoly operator*(const Rat& s, const RatPoly& f);

// Quotient and remainder of polynomial division over the rationals.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g);

// Integer polynomial proportional to f by a positive rational factor:
// denominators cleared, content divided out, leading sign preserved.
IntPoly primitive_int(const RatPoly& f);

// Coefficients as "p/q" strings (bare integer when the denominator is 1).
std::string to_string(const RatPoly& f);

}  // namespace eupair
