#include "eupair/coeff_family.hpp"

#include <sstream>
#include <stdexcept>

namespace eupair {

namespace {
const AffineCoeff kZeroCoeff{0, 0};
}

void CoeffFamily::normalize() {
  while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
}

CoeffFamily CoeffFamily::from_poly(const IntPoly& constant_part) {
  std::vector<AffineCoeff> t;
  t.reserve(constant_part.coeffs().size());
  for (const auto& c : constant_part.coeffs()) t.push_back({c, 0});
  return CoeffFamily(std::move(t));
}

CoeffFamily CoeffFamily::term(Int c0, Int c1, std::size_t k) {
  std::vector<AffineCoeff> t(k + 1, kZeroCoeff);
  t[k] = {std::move(c0), std::move(c1)};
  return CoeffFamily(std::move(t));
}

const AffineCoeff& CoeffFamily::term(std::size_t k) const {
  if (k < terms_.size()) return terms_[k];
  return kZeroCoeff;
}

IntPoly CoeffFamily::instantiate(const Int& n) const {
  std::vector<Int> c;
  c.reserve(terms_.size());
  for (const auto& t : terms_) c.push_back(t.at(n));
  return IntPoly(std::move(c));
}

CoeffFamily& CoeffFamily::operator+=(const CoeffFamily& o) {
  if (terms_.size() < o.terms_.size()) terms_.resize(o.terms_.size(), kZeroCoeff);
  for (std::size_t k = 0; k < o.terms_.size(); ++k) {
    terms_[k].c0 += o.terms_[k].c0;
    terms_[k].c1 += o.terms_[k].c1;
  }
  normalize();
  return *this;
}

CoeffFamily scale(const Int& s, const CoeffFamily& f) {
  if (s == 0) return CoeffFamily{};
  std::vector<AffineCoeff> t = f.terms();
  for (auto& c : t) {
    c.c0 *= s;
    c.c1 *= s;
  }
  return CoeffFamily(std::move(t));
}

CoeffFamily shift_up(const CoeffFamily& f, std::size_t k) {
  if (f.is_zero() || k == 0) return f;
  std::vector<AffineCoeff> t(k, kZeroCoeff);
  t.insert(t.end(), f.terms().begin(), f.terms().end());
  return CoeffFamily(std::move(t));
}

FamilyPair family_split(const CoeffFamily& f) {
  std::vector<AffineCoeff> e, o;
  for (std::size_t k = 0; k < f.terms().size(); ++k) {
    if (k % 2 == 0)
      e.push_back(f.terms()[k]);
    else
      o.push_back(f.terms()[k]);
  }
  return {CoeffFamily(std::move(e)), CoeffFamily(std::move(o))};
}

namespace {

void append_addend(std::ostringstream& out, bool& first, const Int& c, bool with_n, std::size_t k) {
  if (c == 0) return;
  Int mag = abs(c);
  if (first) {
    if (c < 0) out << "-";
    first = false;
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  bool have_factor = with_n || k > 0;
  if (mag != 1 || !have_factor) {
    out << mag.str();
    if (have_factor) out << "*";
  }
  if (with_n) {
    out << "n";
    if (k > 0) out << "*";
  }
  if (k == 1)
    out << "x";
  else if (k > 1)
    out << "x^" << k;
}

}  // namespace

std::string to_string(const CoeffFamily& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < f.terms().size(); ++k) {
    append_addend(out, first, f.terms()[k].c0, false, k);
    append_addend(out, first, f.terms()[k].c1, true, k);
  }
  return out.str();
}

}  // namespace eupair
