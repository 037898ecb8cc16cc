#include "eupair/catalog.hpp"

#include <stdexcept>

namespace eupair {

namespace {

CoeffFamily fam(std::vector<AffineCoeff> terms) { return CoeffFamily(std::move(terms)); }

RecurrenceSpec single_spec(std::string name, CoeffFamily alpha, CoeffFamily beta, IntPoly init,
                           int start) {
  return RecurrenceSpec{std::move(name), std::move(alpha), std::move(beta), std::move(init), start};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  auto add_single = [&entries](RecurrenceSpec spec, std::string description) {
    CatalogEntry e;
    e.name = spec.name;
    e.kind = EntryKind::single;
    e.single = std::move(spec);
    e.description = std::move(description);
    entries.push_back(std::move(e));
  };
  auto add_pair = [&entries](PairSystemSpec spec, std::string description) {
    CatalogEntry e;
    e.name = spec.name;
    e.kind = EntryKind::pair;
    e.pair = std::move(spec);
    e.description = std::move(description);
    entries.push_back(std::move(e));
  };

  const CoeffFamily beta_x_x2 = CoeffFamily::from_poly(IntPoly{0, 1, -1});        // x(1-x)
  const CoeffFamily beta_2x_x2 = CoeffFamily::from_poly(IntPoly{0, 2, -2});       // 2x(1-x)
  const CoeffFamily beta_x_x3 = CoeffFamily::from_poly(IntPoly{0, 1, 0, -1});     // x(1-x^2)
  const CoeffFamily beta_2x_x3 = CoeffFamily::from_poly(IntPoly{0, 2, 0, -2});    // 2x(1-x^2)

  add_single(single_spec("A", fam({{1, 0}, {0, 1}}), beta_x_x2, IntPoly{1}, 0),
             "Eulerian polynomials: descents over permutations");
  add_single(single_spec("B", fam({{1, 0}, {1, 2}}), beta_2x_x2, IntPoly{1}, 0),
             "type B Eulerian polynomials: descents over signed permutations");

  {
    CatalogEntry e;
    e.name = "D";
    e.kind = EntryKind::derived;
    e.description =
        "type D Eulerian polynomials: descents over even-signed permutations, "
        "assembled as D_n = B_n - n*2^(n-1)*x*A_(n-1) with D_0 = D_1 = 1";
    entries.push_back(std::move(e));
  }

  add_single(single_spec("C", fam({{1, 0}, {1, 0}, {0, 2}}), beta_x_x3, IntPoly{1}, 0),
             "flag descent polynomials over signed permutations");
  add_single(single_spec("L", fam({{0, 0}, {1, 0}, {0, 2}}), beta_x_x3, IntPoly{1}, 0),
             "flag ascent-plateau polynomials over Stirling permutations");
  add_single(single_spec("T", fam({{0, 0}, {1, 0}, {0, 1}}), beta_x_x3, IntPoly{1}, 0),
             "up-down run polynomials over permutations");
  add_single(single_spec("R", fam({{1, 0}, {0, 0}, {0, 1}}), beta_x_x3, IntPoly{1, 1}, 1),
             "combined peak polynomials: R_n = Wbar_n(x^2) + x*W_n(x^2)");
  add_single(single_spec("W", fam({{2, 0}, {-1, 1}}), beta_2x_x2, IntPoly{1}, 1),
             "interior peak polynomials over permutations");
  add_single(single_spec("Wbar", fam({{1, 0}, {0, 1}}), beta_2x_x2, IntPoly{1}, 1),
             "left peak polynomials over permutations");
  add_single(single_spec("H", fam({{1, 0}, {1, 0}, {0, 2}}), beta_2x_x3, IntPoly{1}, 0),
             "peak/valley combination over signed permutations with positive first letter: "
             "H_n = U_n(x^2) + x*V_n(x^2)");
  add_single(single_spec("Htilde", fam({{-1, 0}, {3, 0}, {0, 2}}), beta_2x_x3, IntPoly{0, 1}, 1),
             "alternating run polynomials over signed permutations with positive first letter");
  add_single(single_spec("b", fam({{0, 0}, {1, 1}, {1, 1}}), beta_x_x3, IntPoly{0, 1}, 0),
             "diagonal-cell polynomials of symmetric tree-like tableaux");

  add_pair(PairSystemSpec{"CEO",
                          fam({{1, 0}, {0, 2}}),            // p = 2nx + 1
                          beta_2x_x2,                       // q = 2x(1-x)
                          fam({{0, 0}, {1, 0}}),            // r = x
                          fam({{2, 0}, {-1, 2}}),           // u = (2n-1)x + 2
                          beta_2x_x2,                       // v = q
                          fam({{1, 0}}),                    // w = 1
                          IntPoly{1}, IntPoly{1}, 1},
           "even/odd flag-descent pair: descents over signed permutations with positive "
           "(E) respectively negative (O) first letter");
  add_pair(PairSystemSpec{"LEO",
                          fam({{0, 0}, {0, 2}}),            // p = 2nx
                          beta_2x_x2,
                          fam({{0, 0}, {1, 0}}),            // r = x
                          fam({{1, 0}, {-1, 2}}),           // u = (2n-1)x + 1
                          beta_2x_x2,
                          fam({{1, 0}}),
                          IntPoly{}, IntPoly{1}, 1},
           "ascent-plateau pair over Stirling permutations split by first-letter equality");
  add_pair(PairSystemSpec{"TEO",
                          fam({{0, 0}, {0, 1}}),            // p = nx
                          beta_2x_x2,
                          fam({{0, 0}, {1, 0}}),            // r = x
                          fam({{1, 0}, {-1, 1}}),           // u = (n-1)x + 1
                          beta_2x_x2,
                          fam({{1, 0}}),
                          IntPoly{}, IntPoly{1}, 1},
           "left peak pair over permutations split by descent/ascent at the last position");
  add_pair(PairSystemSpec{"UV",
                          fam({{1, 0}, {0, 2}}),            // p = 2nx + 1
                          CoeffFamily::from_poly(IntPoly{0, 4, -4}),  // q = 4x(1-x)
                          fam({{0, 0}, {1, 0}}),            // r = x
                          fam({{3, 0}, {-2, 2}}),           // u = (2n-2)x + 3
                          CoeffFamily::from_poly(IntPoly{0, 4, -4}),
                          fam({{1, 0}}),
                          IntPoly{1}, IntPoly{}, 0},
           "left peak / left valley pair over signed permutations with positive first letter");

  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

PolySeq catalog_sequence(const std::string& name, int n_max) {
  const CatalogEntry* entry = catalog_find(name);
  if (entry == nullptr) throw std::invalid_argument("unknown catalog entry \"" + name + "\"");
  switch (entry->kind) {
    case EntryKind::single:
      return iterate_single(*entry->single, n_max);
    case EntryKind::derived: {
      if (n_max < 0) throw std::invalid_argument("catalog_sequence: n_max must be >= 0 for D");
      PolySeq seq{0, {IntPoly{1}}};
      if (n_max >= 1) seq.values.push_back(IntPoly{1});
      if (n_max >= 2) {
        PolySeq b = catalog_sequence("B", n_max);
        PolySeq a = catalog_sequence("A", n_max - 1);
        Int power = 2;  // 2^(n-1) at n = 2
        for (int n = 2; n <= n_max; ++n) {
          seq.values.push_back(b.at(n) - Int(n) * power * shift_up(a.at(n - 1), 1));
          power *= 2;
        }
      }
      return seq;
    }
    case EntryKind::pair:
      throw std::invalid_argument("catalog entry \"" + name + "\" is a pair system; use catalog_pair_sequence");
  }
  throw std::logic_error("unreachable");
}

PairSeq catalog_pair_sequence(const std::string& name, int n_max) {
  const CatalogEntry* entry = catalog_find(name);
  if (entry == nullptr) throw std::invalid_argument("unknown catalog entry \"" + name + "\"");
  if (entry->kind != EntryKind::pair)
    throw std::invalid_argument("catalog entry \"" + name + "\" is not a pair system");
  return iterate_pair(*entry->pair, n_max);
}

}  // namespace eupair
