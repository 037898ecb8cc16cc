#include "eupair/analyze.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "eupair/rat_poly.hpp"

namespace eupair {

namespace {

IntPoly primitive_positive(const IntPoly& f) {
  IntPoly p = primitive_int(RatPoly(f));
  if (p.leading() < 0) p = -p;
  return p;
}

}  // namespace

bool is_symmetric(const IntPoly& f, std::size_t n) {
  if (f.degree() && *f.degree() > n) return false;
  for (std::size_t i = 0; 2 * i <= n; ++i)
    if (f.coeff(i) != f.coeff(n - i)) return false;
  return true;
}

UnimodalReport is_unimodal(const IntPoly& f) {
  UnimodalReport rep;
  if (f.is_zero()) {
    rep.unimodal = true;
    return rep;
  }
  const std::size_t d = *f.degree();
  std::size_t a = 0;
  while (a < d && f.coeff(a) <= f.coeff(a + 1)) ++a;
  for (std::size_t i = a; i < d; ++i)
    if (f.coeff(i) < f.coeff(i + 1)) return rep;  // rises after the peak
  rep.unimodal = true;
  const Int& top = f.coeff(a);
  std::size_t lo = a, hi = a;
  while (lo > 0 && f.coeff(lo - 1) == top) --lo;
  while (hi < d && f.coeff(hi + 1) == top) ++hi;
  rep.mode = {lo, hi};
  return rep;
}

bool is_alternatingly_increasing(const IntPoly& f, std::size_t n) {
  if (f.degree() && *f.degree() > n) return false;
  // Visit exponents in the order 0, n, 1, n-1, 2, ...; the coefficient
  // chain must be weakly increasing along it.
  std::vector<std::size_t> order;
  std::size_t lo = 0, hi = n;
  while (lo <= hi) {
    order.push_back(lo);
    if (hi != lo) order.push_back(hi);
    ++lo;
    if (hi == 0) break;
    --hi;
  }
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (f.coeff(order[i]) > f.coeff(order[i + 1])) return false;
  return true;
}

GammaVector gamma_vector(const IntPoly& f, std::size_t n) {
  if (!is_symmetric(f, n))
    throw std::invalid_argument("gamma_vector: polynomial is not symmetric for the given degree");
  GammaVector g;
  g.n = n;
  IntPoly rest = f;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    const Int c = rest.coeff(k);
    g.values.push_back(c);
    if (c != 0) {
      IntPoly basis = shift_up(pow(IntPoly{1, 1}, n - 2 * k), k);
      rest -= c * basis;
    }
  }
  if (!rest.is_zero())
    throw std::invalid_argument("gamma_vector: expansion left a nonzero residue");
  return g;
}

IntPoly gamma_recompose(const GammaVector& g) {
  IntPoly f;
  for (std::size_t k = 0; k < g.values.size(); ++k)
    f += g.values[k] * shift_up(pow(IntPoly{1, 1}, g.n - 2 * k), k);
  return f;
}

SemiGammaVector semi_gamma_vector(const IntPoly& f, unsigned nu, std::size_t n) {
  if (nu > 1) throw std::invalid_argument("semi_gamma_vector: nu must be 0 or 1");
  SemiGammaVector g;
  g.n = n;
  g.nu = nu;
  IntPoly rest = nu == 1 ? exact_div(f, IntPoly{1, 1}) : f;
  // The k-th basis element x^k (1+x^2)^(n-k) has degree 2n-k, so the
  // expansion can reach degree 2n.
  if (rest.degree() && *rest.degree() > 2 * n)
    throw std::invalid_argument("semi_gamma_vector: degree exceeds the stated bound");
  for (std::size_t k = 0; k <= n; ++k) {
    const Int c = rest.coeff(k);
    g.values.push_back(c);
    if (c != 0) {
      IntPoly basis = shift_up(pow(IntPoly{1, 0, 1}, n - k), k);
      rest -= c * basis;
    }
  }
  if (!rest.is_zero())
    throw std::invalid_argument("semi_gamma_vector: expansion left a nonzero residue");
  return g;
}

IntPoly semi_gamma_recompose(const SemiGammaVector& g) {
  IntPoly f;
  for (std::size_t k = 0; k < g.values.size(); ++k)
    f += g.values[k] * shift_up(pow(IntPoly{1, 0, 1}, g.n - k), k);
  if (g.nu == 1) f *= IntPoly{1, 1};
  return f;
}

// --- exact root machinery -------------------------------------------------

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  auto normalize = [](IntPoly f) {
    if (f.is_zero()) return f;
    RatPoly r(f);
    IntPoly p = primitive_int(r);
    if (p.leading() < 0) p = -p;
    return p;
  };
  IntPoly x = normalize(a), y = normalize(b);
  while (!y.is_zero()) {
    RatPoly rem = divmod(RatPoly(x), RatPoly(y)).second;
    x = std::move(y);
    y = rem.is_zero() ? IntPoly{} : [&] {
      IntPoly p = primitive_int(rem);
      if (p.leading() < 0) p = -p;
      return p;
    }();
  }
  return x;
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (*f.degree() == 0) return IntPoly{1};
  IntPoly g = poly_gcd(f, f.derivative());
  IntPoly s = exact_div(primitive_positive(f), g);
  if (s.leading() < 0) s = -s;
  return s;
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<IntPoly, unsigned>> out;
  if (*f.degree() == 0) return out;
  IntPoly g = poly_gcd(f, f.derivative());
  IntPoly w = exact_div(primitive_positive(f), g);
  unsigned i = 1;
  while (!w.is_zero() && *w.degree() >= 1) {
    IntPoly y = poly_gcd(w, g);
    IntPoly a = exact_div(w, y);
    if (a.degree() && *a.degree() >= 1) out.emplace_back(std::move(a), i);
    w = std::move(y);
    g = exact_div(g, w);
    ++i;
  }
  return out;
}

namespace {

// Sturm chain of s: s, s', then negated pseudo-remainders, each renormalized
// to a primitive integer polynomial (positive scaling leaves the sign
// variation count unchanged).
std::vector<IntPoly> sturm_chain(const IntPoly& s) {
  std::vector<IntPoly> chain;
  chain.push_back(s);
  if (*s.degree() == 0) return chain;
  chain.push_back(s.derivative());
  while (true) {
    const IntPoly& b = chain[chain.size() - 1];
    if (b.is_zero() || *b.degree() == 0) break;
    RatPoly rem = divmod(RatPoly(chain[chain.size() - 2]), RatPoly(b)).second;
    if (rem.is_zero()) break;
    IntPoly next = primitive_int(rem);
    chain.push_back(-next);
  }
  return chain;
}

int variations(const std::vector<IntPoly>& chain, const Rat& t) {
  int count = 0, prev = 0;
  for (const IntPoly& p : chain) {
    const int s = sign(p(t));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

long count_between(const std::vector<IntPoly>& chain, const Rat& lo, const Rat& hi) {
  return variations(chain, lo) - variations(chain, hi);
}

// Strict upper bound on the absolute value of every root.
Rat cauchy_bound(const IntPoly& f) {
  const std::size_t d = *f.degree();
  Int m = 0;
  for (std::size_t i = 0; i < d; ++i) {
    Int a = f.coeff(i) < 0 ? Int(-f.coeff(i)) : f.coeff(i);
    if (a > m) m = a;
  }
  Int lead = f.leading() < 0 ? Int(-f.leading()) : f.leading();
  return Rat(1) + Rat(m, lead);
}

struct RawRoot {
  Rat lo, hi;  // root in (lo, hi], or exactly at hi when exact
  bool exact = false;
};

// Isolate the distinct real roots of square-free s, ascending.
std::vector<RawRoot> isolate_roots(const IntPoly& s, const std::vector<IntPoly>& chain) {
  std::vector<RawRoot> out;
  if (*s.degree() == 0) return out;
  const Rat bound = cauchy_bound(s);
  struct Task {
    Rat lo, hi;
    long count;
  };
  std::vector<Task> stack;
  const long total = count_between(chain, -bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    if (t.count == 1) {
      if (s(t.hi) == 0)
        out.push_back({t.hi, t.hi, true});
      else
        out.push_back({t.lo, t.hi, false});
      continue;
    }
    const Rat mid = (t.lo + t.hi) / 2;
    const long left = count_between(chain, t.lo, mid);
    // Push right first so the left half is processed first (ascending output).
    if (t.count - left > 0) stack.push_back({mid, t.hi, t.count - left});
    if (left > 0) stack.push_back({t.lo, mid, left});
  }
  return out;
}

// Does f vanish at the root described by r (a root of some square-free s)?
// Precondition: every real root of f is also a root of s, so (lo, hi]
// contains at most one root of f and membership is a Sturm count.
bool vanishes_at(const IntPoly& f, const std::vector<IntPoly>& f_chain, const RawRoot& r) {
  if (r.exact) return f(r.hi) == 0;
  return count_between(f_chain, r.lo, r.hi) == 1;
}

}  // namespace

long count_roots_in(const IntPoly& squarefree, const Rat& lo, const Rat& hi) {
  if (squarefree.is_zero()) throw std::invalid_argument("count_roots_in: zero polynomial");
  if (*squarefree.degree() == 0) return 0;
  return count_between(sturm_chain(squarefree), lo, hi);
}

RootReport root_report(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("root_report: zero polynomial");
  RootReport rep;
  const std::size_t d = *f.degree();
  if (d == 0) {
    rep.all_real = true;
    rep.all_nonpositive = true;
    return rep;
  }
  rep.zero_is_root = f.coeff(0) == 0;
  const IntPoly s = squarefree_part(f);
  const auto chain = sturm_chain(s);
  const auto layers = squarefree_decomposition(f);
  std::vector<std::vector<IntPoly>> layer_chains;
  layer_chains.reserve(layers.size());
  for (const auto& [a, i] : layers) layer_chains.push_back(sturm_chain(a));
  for (const RawRoot& raw : isolate_roots(s, chain)) {
    unsigned mult = 0;
    for (std::size_t j = 0; j < layers.size(); ++j)
      if (vanishes_at(layers[j].first, layer_chains[j], raw)) {
        mult = layers[j].second;
        break;
      }
    rep.roots.push_back({raw.lo, raw.hi, raw.exact, mult});
    rep.real_root_count += mult;
  }
  rep.all_real = rep.real_root_count == d;
  rep.all_nonpositive = count_between(chain, Rat(0), cauchy_bound(s)) == 0;
  return rep;
}

bool interlaces(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero() || p.leading() < 0 || q.leading() < 0)
    throw std::invalid_argument("interlaces: inputs must be nonzero with positive leading coefficient");
  const std::size_t dp = *p.degree(), dq = *q.degree();
  if (dq != dp && dq != dp + 1) return false;
  if (dp == 0) return true;  // constant p: only q's real-rootedness matters
  const RootReport rp = root_report(p);
  if (!rp.all_real) return false;
  const RootReport rq = root_report(q);
  if (!rq.all_real) return false;

  const IntPoly s = squarefree_part(p * q);
  const auto chain = sturm_chain(s);
  const auto layers_p = squarefree_decomposition(p);
  const auto layers_q = squarefree_decomposition(q);
  std::vector<std::vector<IntPoly>> chains_p, chains_q;
  for (const auto& [a, i] : layers_p) chains_p.push_back(sturm_chain(a));
  for (const auto& [a, i] : layers_q) chains_q.push_back(sturm_chain(a));

  // Merge the two root lists symbol by symbol: xi = root of p, theta = root
  // of q. A valid weak interlacing reads xi theta xi theta ... (equal
  // degrees) or theta xi theta ... (deg q = deg p + 1), where a shared root
  // of multiplicities a in p and b in q forms one block of a+b symbols whose
  // order within the block is free. Such a block can start as required only
  // when |a-b| <= 1; it flips the expected next symbol when a != b.
  enum Sym { XI, THETA };
  Sym expected = dq == dp ? XI : THETA;
  for (const RawRoot& raw : isolate_roots(s, chain)) {
    unsigned a = 0, b = 0;
    for (std::size_t j = 0; j < layers_p.size(); ++j)
      if (vanishes_at(layers_p[j].first, chains_p[j], raw)) a = layers_p[j].second;
    for (std::size_t j = 0; j < layers_q.size(); ++j)
      if (vanishes_at(layers_q[j].first, chains_q[j], raw)) b = layers_q[j].second;
    if (a == b) continue;  // balanced block: starts and flips parity a+b times
    if (a == b + 1) {
      if (expected != XI) return false;
      expected = THETA;
    } else if (b == a + 1) {
      if (expected != THETA) return false;
      expected = XI;
    } else {
      return false;  // multiplicity gap >= 2 cannot alternate weakly
    }
  }
  return true;
}

HurwitzReport hurwitz_stable(const IntPoly& f, bool strip_origin) {
  if (f.is_zero()) throw std::invalid_argument("hurwitz_stable: zero polynomial");
  HurwitzReport rep;
  IntPoly g = f;
  std::size_t low = 0;
  while (g.coeff(low) == 0) ++low;
  if (low > 0) {
    if (!strip_origin) {
      rep.origin_root = true;
      return rep;  // a root at the origin is not in the open left half-plane
    }
    std::vector<Int> shifted;
    for (std::size_t i = low; i <= *g.degree(); ++i) shifted.push_back(g.coeff(i));
    g = IntPoly(std::move(shifted));
    rep.stripped_origin_power = low;
  }
  if (g.leading() < 0) g = -g;
  const std::size_t d = *g.degree();
  if (d == 0) {
    rep.stable = true;
    return rep;
  }
  // Routh array over exact rationals; a[i] is the coefficient of x^(d-i).
  auto a = [&](std::size_t i) { return Rat(g.coeff(d - i)); };
  std::vector<Rat> prev, cur;
  for (std::size_t i = 0; i <= d; i += 2) prev.push_back(a(i));
  for (std::size_t i = 1; i <= d; i += 2) cur.push_back(a(i));
  auto at = [](const std::vector<Rat>& row, std::size_t j) {
    return j < row.size() ? row[j] : Rat(0);
  };
  std::vector<Rat> first_col = {prev[0]};
  for (std::size_t k = 1; k <= d; ++k) {
    if (cur.empty() || cur[0] == 0) {
      rep.zero_pivot = true;
      return rep;
    }
    first_col.push_back(cur[0]);
    if (k == d) break;
    std::vector<Rat> next;
    const std::size_t width = prev.size() > 1 ? prev.size() - 1 : 1;
    for (std::size_t j = 0; j < width; ++j)
      next.push_back(at(prev, j + 1) - prev[0] / cur[0] * at(cur, j + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  rep.stable = std::all_of(first_col.begin(), first_col.end(),
                           [](const Rat& v) { return v > 0; });
  return rep;
}

HermiteBiehlerReport hermite_biehler_check(const IntPoly& f) {
  if (f.is_zero() || f.leading() < 0)
    throw std::invalid_argument("hermite_biehler_check: input must be nonzero with positive leading coefficient");
  HermiteBiehlerReport rep;
  if (*f.degree() == 0) {
    rep.stable = rep.split_ok = true;
    rep.e_standard = rep.o_standard = true;
    rep.e_roots_real_nonpositive = rep.o_roots_real_nonpositive = true;
    rep.o_interlaces_e = true;
    rep.agree = true;
    return rep;
  }
  rep.stable = hurwitz_stable(f, false).stable;
  const PolyPair eo = hb_split(f);
  rep.e_standard = !eo.e.is_zero() && eo.e.leading() > 0;
  rep.o_standard = !eo.o.is_zero() && eo.o.leading() > 0;
  auto real_nonpos = [](const IntPoly& g) {
    const RootReport r = root_report(g);
    return r.all_real && r.all_nonpositive;
  };
  rep.e_roots_real_nonpositive = rep.e_standard && real_nonpos(eo.e);
  rep.o_roots_real_nonpositive = rep.o_standard && real_nonpos(eo.o);
  rep.o_interlaces_e =
      rep.e_standard && rep.o_standard && interlaces(eo.o, eo.e);
  rep.split_ok = rep.e_roots_real_nonpositive && rep.o_roots_real_nonpositive &&
                 rep.o_interlaces_e;
  rep.boundary = f.coeff(0) == 0 || eo.o.is_zero() ||
                 (!eo.e.is_zero() && eo.e.coeff(0) == 0) ||
                 (!eo.o.is_zero() && eo.o.coeff(0) == 0);
  if (!rep.boundary && !eo.e.is_zero() && !eo.o.is_zero()) {
    const IntPoly g = poly_gcd(eo.e, eo.o);
    rep.boundary = g.degree() && *g.degree() >= 1;
  }
  rep.agree = rep.stable == rep.split_ok || rep.boundary;
  return rep;
}

}  // namespace eupair
