#include "eupair/rat_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace eupair {

namespace {
const Rat kZero = 0;
}

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly::RatPoly(const IntPoly& f) {
  coeffs_.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) coeffs_.emplace_back(c);
}

RatPoly RatPoly::constant(Rat c) {
  RatPoly f;
  if (c != 0) f.coeffs_.push_back(std::move(c));
  return f;
}

const Rat& RatPoly::coeff(std::size_t k) const {
  if (k < coeffs_.size()) return coeffs_[k];
  return kZero;
}

const Rat& RatPoly::leading() const {
  if (coeffs_.empty()) throw std::invalid_argument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return RatPoly{};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rat(k) * coeffs_[k];
  return RatPoly(std::move(d));
}

Rat RatPoly::operator()(const Rat& t) const {
  Rat acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc *= t;
    acc += coeffs_[k];
  }
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly f = *this;
  for (auto& c : f.coeffs_) c = -c;
  return f;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly{};
  std::vector<Rat> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(prod));
}

RatPoly operator*(const Rat& s, const RatPoly& f) {
  if (s == 0) return RatPoly{};
  std::vector<Rat> c = f.coeffs();
  for (auto& v : c) v *= s;
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("divmod: division by the zero polynomial");
  if (f.is_zero() || *f.degree() < *g.degree()) return {RatPoly{}, f};
  std::vector<Rat> rem = f.coeffs();
  const std::size_t dg = *g.degree();
  const Rat& lead = g.leading();
  std::vector<Rat> quot(rem.size() - dg, Rat(0));
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (rem[k] == 0) continue;
    Rat q = rem[k] / lead;
    quot[k - dg] = q;
    for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= q * g.coeffs()[j];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

IntPoly primitive_int(const RatPoly& f) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (f.is_zero()) return IntPoly{};
  Int den_lcm = 1;
  for (const auto& c : f.coeffs()) {
    Int d = denominator(c);
    den_lcm = lcm(den_lcm, d);
  }
  std::vector<Int> scaled;
  scaled.reserve(f.coeffs().size());
  Int content = 0;
  for (const auto& c : f.coeffs()) {
    Int v = numerator(c) * (den_lcm / denominator(c));
    content = gcd(content, v);
    scaled.push_back(std::move(v));
  }
  if (content == 0) return IntPoly{};
  for (auto& v : scaled) v /= content;
  return IntPoly(std::move(scaled));
}

std::string to_string(const RatPoly& f) {
  using boost::multiprecision::denominator;
  if (f.is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k > 0) out << " + ";
    const Rat& c = f.coeffs()[k];
    out << c.str();
    if (k == 1)
      out << "*x";
    else if (k > 1)
      out << "*x^" << k;
  }
  return out.str();
}

}  // namespace eupair
