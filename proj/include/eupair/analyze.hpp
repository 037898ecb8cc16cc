#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "eupair/int_poly.hpp"
#include "eupair/numeric.hpp"

namespace eupair {

// f_i == f_{n-i} for 0 <= i <= n (false when deg f exceeds n).
bool is_symmetric(const IntPoly& f, std::size_t n);

struct UnimodalReport {
  bool unimodal = false;
  // Inclusive exponent range of the maximal coefficient plateau.
  std::optional<std::pair<std::size_t, std::size_t>> mode;
};
UnimodalReport is_unimodal(const IntPoly& f);

// f_0 <= f_n <= f_1 <= f_{n-1} <= f_2 <= ... ending at f_{floor((n+1)/2)}.
bool is_alternatingly_increasing(const IntPoly& f, std::size_t n);

// Expansion f = sum_k gamma_k x^k (1+x)^(n-2k), defined for symmetric f.
struct GammaVector {
  std::size_t n = 0;
  std::vector<Int> values;  // gamma_0 .. gamma_floor(n/2)
};
GammaVector gamma_vector(const IntPoly& f, std::size_t n);
IntPoly gamma_recompose(const GammaVector& g);

// Expansion f = (1+x)^nu * sum_k lambda_k x^k (1+x^2)^(n-k), nu in {0,1}.
struct SemiGammaVector {
  std::size_t n = 0;
  unsigned nu = 0;
  std::vector<Int> values;  // lambda_0 .. lambda_n
};
SemiGammaVector semi_gamma_vector(const IntPoly& f, unsigned nu, std::size_t n);
IntPoly semi_gamma_recompose(const SemiGammaVector& g);

// Exact real-root census. Intervals are half-open (lo, hi] with rational
// endpoints, pairwise disjoint, ascending, one distinct root each; roots
// identified exactly are reported as points (lo == hi == root).
struct IsolatedRoot {
  Rat lo, hi;
  bool exact = false;
  unsigned multiplicity = 1;
};
struct RootReport {
  std::size_t real_root_count = 0;  // counted with multiplicity
  bool all_real = false;
  bool all_nonpositive = false;
  bool zero_is_root = false;
  std::vector<IsolatedRoot> roots;
};
RootReport root_report(const IntPoly& f);

// Weak interlacing p < q: both real-rooted with deg q - deg p in {0, 1}
// and, with xi the sorted roots of p and theta those of q (with
// multiplicity), theta_1 <= xi_1 <= theta_2 <= ... (degree gap one) or
// xi_1 <= theta_1 <= xi_2 <= ... (equal degree). Non-real-rooted input or
// a degree gap outside {0, 1} yields false. Preconditions: p, q nonzero
// with positive leading coefficients.
bool interlaces(const IntPoly& p, const IntPoly& q);

struct HurwitzReport {
  bool stable = false;
  bool zero_pivot = false;    // a Routh pivot vanished (boundary case)
  bool origin_root = false;   // constant term zero without stripping
  std::size_t stripped_origin_power = 0;
};
// Exact Routh-Hurwitz test for all roots in the open left half-plane.
// With strip_origin, the highest power of x dividing f is removed first.
HurwitzReport hurwitz_stable(const IntPoly& f, bool strip_origin);

// Evaluates both sides of the Hermite-Biehler equivalence for standard f:
// Hurwitz stability against (hb_split parts standard, real nonpositive
// roots, odd part interlacing even part). The two verdicts must agree
// except in flagged boundary cases (roots at the origin or shared E/O
// roots, which sit on the weak/strict divide).
struct HermiteBiehlerReport {
  bool stable = false;
  bool split_ok = false;
  bool e_standard = false, o_standard = false;
  bool e_roots_real_nonpositive = false, o_roots_real_nonpositive = false;
  bool o_interlaces_e = false;
  bool boundary = false;
  bool agree = false;
};
HermiteBiehlerReport hermite_biehler_check(const IntPoly& f);

// Exact polynomial gcd (primitive, positive leading coefficient).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
// Product of the distinct irreducible factors (primitive, positive lead).
IntPoly squarefree_part(const IntPoly& f);
// Yun decomposition f ~ prod a_i^i restricted to nonconstant a_i.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f);
// Distinct real roots of square-free s in the half-open interval (lo, hi].
long count_roots_in(const IntPoly& squarefree, const Rat& lo, const Rat& hi);

}  // namespace eupair
