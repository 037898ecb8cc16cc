#include "eupair/int_poly.hpp"

#include <cctype>
#include <sstream>

namespace eupair {

namespace {
const Int kZero = 0;
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
  IntPoly f;
  if (c != 0) f.coeffs_.push_back(std::move(c));
  return f;
}

IntPoly IntPoly::monomial(Int c, std::size_t k) {
  IntPoly f;
  if (c != 0) {
    f.coeffs_.assign(k, kZero);
    f.coeffs_.push_back(std::move(c));
  }
  return f;
}

const Int& IntPoly::coeff(std::size_t k) const {
  if (k < coeffs_.size()) return coeffs_[k];
  return kZero;
}

const Int& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::invalid_argument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly{};
  std::vector<Int> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Int(k) * coeffs_[k];
  return IntPoly(std::move(d));
}

Int IntPoly::operator()(const Int& t) const {
  Int acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc *= t;
    acc += coeffs_[k];
  }
  return acc;
}

Rat IntPoly::operator()(const Rat& t) const {
  Rat acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc *= t;
    acc += Rat(coeffs_[k]);
  }
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly f = *this;
  for (auto& c : f.coeffs_) c = -c;
  return f;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly{};
  std::vector<Int> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(prod));
}

IntPoly operator*(const Int& s, const IntPoly& f) {
  if (s == 0) return IntPoly{};
  std::vector<Int> c = f.coeffs();
  for (auto& v : c) v *= s;
  return IntPoly(std::move(c));
}

IntPoly shift_up(const IntPoly& f, std::size_t k) {
  if (f.is_zero() || k == 0) return k == 0 ? f : IntPoly{};
  std::vector<Int> c(k, Int(0));
  c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
  return IntPoly(std::move(c));
}

IntPoly reverse(const IntPoly& f, std::size_t n) {
  if (f.is_zero()) return f;
  if (n < *f.degree())
    throw std::invalid_argument("reverse: window " + std::to_string(n) +
                                " smaller than degree " + std::to_string(*f.degree()));
  std::vector<Int> c(n + 1, Int(0));
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) c[n - k] = f.coeffs()[k];
  return IntPoly(std::move(c));
}

IntPoly substitute_neg(const IntPoly& f) {
  std::vector<Int> c = f.coeffs();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return IntPoly(std::move(c));
}

PolyPair hb_split(const IntPoly& f) {
  std::vector<Int> e, o;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k % 2 == 0)
      e.push_back(f.coeffs()[k]);
    else
      o.push_back(f.coeffs()[k]);
  }
  return {IntPoly(std::move(e)), IntPoly(std::move(o))};
}

IntPoly hb_join(const IntPoly& e, const IntPoly& o) {
  std::size_t n = std::max(e.coeffs().size() * 2, o.coeffs().size() * 2 + 1);
  if (n == 0) return IntPoly{};
  std::vector<Int> c(n, Int(0));
  for (std::size_t k = 0; k < e.coeffs().size(); ++k) c[2 * k] = e.coeffs()[k];
  for (std::size_t k = 0; k < o.coeffs().size(); ++k) c[2 * k + 1] = o.coeffs()[k];
  return IntPoly(std::move(c));
}

PolyPair even_odd_uncompressed(const IntPoly& f) {
  std::vector<Int> e(f.coeffs().size(), Int(0)), o(f.coeffs().size(), Int(0));
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    (k % 2 == 0 ? e : o)[k] = f.coeffs()[k];
  }
  return {IntPoly(std::move(e)), IntPoly(std::move(o))};
}

ExactDivisionError::ExactDivisionError(std::string message, IntPoly remainder)
    : std::runtime_error(std::move(message)), remainder_(std::move(remainder)) {}

IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("exact_div: division by the zero polynomial");
  if (f.is_zero()) return IntPoly{};
  if (*f.degree() < *g.degree())
    throw ExactDivisionError("exact_div: divisor degree exceeds dividend degree, remainder " + to_string(f), f);

  // Schoolbook long division; every quotient coefficient must come out an
  // exact integer and the final remainder must vanish.
  std::vector<Int> rem = f.coeffs();
  const std::size_t dg = *g.degree();
  const Int& lead = g.leading();
  std::vector<Int> quot(rem.size() - dg, Int(0));
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (rem[k] == 0) continue;
    Int q = rem[k] / lead;
    if (q * lead != rem[k]) {
      IntPoly r(std::vector<Int>(rem.begin(), rem.begin() + k + 1));
      throw ExactDivisionError("exact_div: non-exact division, remainder " + to_string(r), r);
    }
    quot[k - dg] = q;
    for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= q * g.coeffs()[j];
  }
  IntPoly r(std::move(rem));
  if (!r.is_zero())
    throw ExactDivisionError("exact_div: non-exact division, remainder " + to_string(r), r);
  return IntPoly(std::move(quot));
}

IntPoly pow(const IntPoly& f, unsigned k) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = f;
  while (k != 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k != 0) base *= base;
  }
  return result;
}

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k > 0) out << " + ";
    out << f.coeffs()[k].str();
    if (k == 1)
      out << "*x";
    else if (k > 1)
      out << "*x^" << k;
  }
  return out.str();
}

namespace {

// One term of the canonical polynomial text: [sign] [integer] [*x[^k]].
struct TermParser {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::optional<Int> integer() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) {
      i = start;
      return std::nullopt;
    }
    return Int(s.substr(start, i - start));
  }
};

}  // namespace

IntPoly poly_from_string(const std::string& text) {
  TermParser p{text};
  std::vector<Int> acc;
  auto add = [&acc](std::size_t k, const Int& c) {
    if (acc.size() <= k) acc.resize(k + 1, Int(0));
    acc[k] += c;
  };
  bool first = true;
  for (;;) {
    p.skip_ws();
    if (p.i >= text.size()) break;
    int outer_sign = 1;
    if (!first) {
      if (p.eat('+')) {
      } else if (p.eat('-')) {
        outer_sign = -1;
      } else {
        throw std::invalid_argument("polynomial text: expected '+' or '-' near \"" + text.substr(p.i) + "\"");
      }
    }
    first = false;
    std::optional<Int> c = p.integer();
    Int coeff = c ? *c : Int(1);
    std::size_t expo = 0;
    bool saw_x = false;
    if (c) {
      if (p.eat('*')) {
        if (!p.eat('x')) throw std::invalid_argument("polynomial text: expected x after '*'");
        saw_x = true;
      }
    } else if (p.eat('x')) {
      saw_x = true;
    } else {
      throw std::invalid_argument("polynomial text: expected a term near \"" + text.substr(p.i) + "\"");
    }
    if (saw_x) {
      expo = 1;
      if (p.eat('^')) {
        std::optional<Int> e = p.integer();
        if (!e || *e < 0) throw std::invalid_argument("polynomial text: bad exponent");
        expo = static_cast<std::size_t>(*e);
      }
    }
    add(expo, outer_sign * coeff);
  }
  return IntPoly(std::move(acc));
}

std::vector<std::string> to_decimal_coeffs(const IntPoly& f) {
  std::vector<std::string> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c.str());
  return out;
}

IntPoly poly_from_decimal_coeffs(const std::vector<std::string>& coeffs) {
  std::vector<Int> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.emplace_back(s);
  return IntPoly(std::move(c));
}

}  // namespace eupair
