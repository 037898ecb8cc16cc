#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eupair/int_poly.hpp"
#include "eupair/numeric.hpp"

namespace eupair {

// Combinatorial families. "sym" is the symmetric group S_n; "all_signed"
// the hyperoctahedral group of signed permutations (windows with free
// signs); "even_signed" its index-2 subgroup with an even number of
// negative letters; "stirling" the Stirling permutations of the multiset
// {1,1,...,n,n} (every letter between the two copies of i exceeds i).
enum class Family { sym, all_signed, even_signed, stirling };

enum class Stat {
  des_A,   // descents of the window
  des_B,   // descents with a prepended 0
  des_D,   // descents with prepended -pi(2) (even-signed families)
  fdes,    // flag descents: 2*des_A + [first letter negative]
  neg,     // number of negative letters
  exc_A,   // excedances pi(i) > i of the signed window
  fexc,    // flag excedances: 2*exc_A + neg
  ipk,     // interior peaks
  lpk,     // left peaks (prepended 0)
  udrun,   // maximal monotone runs of the 0-prepended window
  pk,      // left peaks of a signed window (prepended 0)
  val,     // left valleys of a signed window (prepended 0)
  altrun,  // maximal monotone runs of the 0-prepended signed window
  ap,      // ascent-plateaus of a Stirling permutation
  lap,     // left ascent-plateaus (prepended 0)
  fap,     // flag ascent-plateaus: 2*ap + [first two letters equal]
};

enum class Filter {
  none,
  first_positive,   // pi(1) > 0
  first_negative,   // pi(1) < 0
  last_positive,    // pi(n) > 0
  last_negative,    // pi(n) < 0
  stirling_plus,    // sigma(1) < sigma(2)
  stirling_minus,   // sigma(1) = sigma(2)
  sym_desc_end,     // pi(n-1) > pi(n), with pi(0) = 0 when n = 1
  sym_asc_end,      // pi(n-1) < pi(n), same convention
};

// One element: the window (pi(1), ..., pi(n)) for permutation families,
// or the full word of length 2n for Stirling permutations.
using Word = std::vector<int>;

std::string to_string(Family f);
std::string to_string(Stat s);
std::string to_string(Filter f);
std::optional<Family> parse_family(const std::string& name);
std::optional<Stat> parse_stat(const std::string& name);
std::optional<Filter> parse_filter(const std::string& name);

bool stat_applies(Stat s, Family f);
bool filter_applies(Filter f, Family fam, int n);
bool filter_accepts(Filter f, const Word& w);

// Streams every element of the family (passing the filter) through fn, in
// a deterministic order. Throws std::invalid_argument for inapplicable
// filters or negative n.
void generate(Family family, int n, Filter filter, const std::function<void(const Word&)>& fn);
std::vector<Word> generate_all(Family family, int n, Filter filter = Filter::none);

// Closed-form family size with the trivial filter (n!, 2^n n!, 2^(n-1) n!
// for n >= 1, and (2n-1)!! respectively).
Int family_size(Family family, int n);

long statistic(Stat s, const Word& w);

struct JointDistribution {
  Family family = Family::sym;
  int n = 0;
  Filter filter = Filter::none;
  std::vector<Stat> stats;
  // Joint counts keyed by the tuple of statistic values, in stats order.
  std::map<std::vector<int>, Int> entries;

  Int total() const;
};

JointDistribution joint_distribution(Family family, int n, Filter filter, std::vector<Stat> stats);

// Projection onto one axis: sum over entries of count * x^(axis value).
IntPoly stat_poly(const JointDistribution& dist, Stat axis);
// Same with every entry weighted by q^(weight statistic value).
IntPoly stat_poly(const JointDistribution& dist, Stat axis, Stat weight_stat, const Int& q);

std::string to_json(const JointDistribution& dist);

// Sign-rotation bijection from signed permutations with positive first
// letter onto those with positive last letter: the identity when the last
// letter is already positive, otherwise the window is rotated at the
// smallest k with pi(k) > 0 > pi(k+1) to (pi(k+1)..pi(n), pi(1)..pi(k)).
// Preserves des_B. Precondition: w nonempty with w[0] > 0.
Word phi_map(const Word& w);

}  // namespace eupair
