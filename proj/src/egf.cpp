#include "eupair/egf.hpp"

#include <sstream>
#include <stdexcept>

#include "eupair/catalog.hpp"
#include "eupair/numeric.hpp"

namespace eupair {

EGFTable::EGFTable(std::size_t order, std::vector<RatPoly> entries)
    : entries_(std::move(entries)) {
  if (entries_.size() != order + 1)
    throw std::invalid_argument("EGFTable: entry count must be order + 1");
}

const RatPoly& EGFTable::entry(std::size_t n) const {
  if (n >= entries_.size()) throw std::out_of_range("EGFTable: entry beyond truncation order");
  return entries_[n];
}

EGFTable egf_from_sequence(const std::vector<IntPoly>& polys) {
  if (polys.empty()) throw std::invalid_argument("egf_from_sequence: need at least entry 0");
  std::vector<RatPoly> entries;
  entries.reserve(polys.size());
  for (const IntPoly& p : polys) entries.emplace_back(p);
  return EGFTable(polys.size() - 1, std::move(entries));
}

EGFTable egf_const(const RatPoly& c, std::size_t order) {
  std::vector<RatPoly> entries(order + 1);
  entries[0] = c;
  return EGFTable(order, std::move(entries));
}

EGFTable egf_exp_linear(const RatPoly& c, std::size_t order) {
  std::vector<RatPoly> entries;
  entries.reserve(order + 1);
  RatPoly power{Rat(1)};
  for (std::size_t n = 0; n <= order; ++n) {
    entries.push_back(power);
    power *= c;
  }
  return EGFTable(order, std::move(entries));
}

EGFTable egf_mul(const EGFTable& a, const EGFTable& b) {
  if (a.order() != b.order()) throw std::invalid_argument("egf_mul: order mismatch");
  std::vector<RatPoly> entries;
  entries.reserve(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) {
    RatPoly sum;
    for (std::size_t k = 0; k <= n; ++k)
      sum += RatPoly{Rat(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)))} *
             a.entry(k) * b.entry(n - k);
    entries.push_back(std::move(sum));
  }
  return EGFTable(a.order(), std::move(entries));
}

EGFTable egf_scale_z(const EGFTable& a, const RatPoly& s) {
  std::vector<RatPoly> entries;
  entries.reserve(a.order() + 1);
  RatPoly power{Rat(1)};
  for (std::size_t n = 0; n <= a.order(); ++n) {
    entries.push_back(power * a.entry(n));
    power *= s;
  }
  return EGFTable(a.order(), std::move(entries));
}

EGFTable egf_add(const EGFTable& a, const EGFTable& b) {
  if (a.order() != b.order()) throw std::invalid_argument("egf_add: order mismatch");
  std::vector<RatPoly> entries;
  for (std::size_t n = 0; n <= a.order(); ++n) entries.push_back(a.entry(n) + b.entry(n));
  return EGFTable(a.order(), std::move(entries));
}

EGFTable egf_sub(const EGFTable& a, const EGFTable& b) {
  if (a.order() != b.order()) throw std::invalid_argument("egf_sub: order mismatch");
  std::vector<RatPoly> entries;
  for (std::size_t n = 0; n <= a.order(); ++n) entries.push_back(a.entry(n) - b.entry(n));
  return EGFTable(a.order(), std::move(entries));
}

EGFTable egf_scale(const EGFTable& a, const RatPoly& c) {
  std::vector<RatPoly> entries;
  for (std::size_t n = 0; n <= a.order(); ++n) entries.push_back(c * a.entry(n));
  return EGFTable(a.order(), std::move(entries));
}

std::string egf_dump(const EGFTable& a) {
  std::ostringstream out;
  for (std::size_t n = 0; n <= a.order(); ++n)
    out << n << ": " << to_string(a.entry(n)) << "\n";
  return out.str();
}

SeriesReport verify_series_identity(const EGFTable& lhs, const EGFTable& rhs) {
  if (lhs.order() != rhs.order())
    throw std::invalid_argument("verify_series_identity: order mismatch");
  SeriesReport rep;
  rep.order = lhs.order();
  for (std::size_t n = 0; n <= lhs.order(); ++n)
    if (lhs.entry(n) != rhs.entry(n)) {
      rep.mismatch = SeriesMismatch{n, lhs.entry(n), rhs.entry(n)};
      return rep;
    }
  rep.equal = true;
  return rep;
}

namespace {

EGFTable catalog_table(const std::string& name, std::size_t order) {
  PolySeq seq = catalog_sequence(name, static_cast<int>(order));
  return egf_from_sequence(seq.values);
}

// Even/odd halves of the flag-descent pair as EGF tables; entry 0 comes
// from the generating-function convention (E starts at 1, O at 0).
EGFTable flag_even_table(std::size_t order) {
  PairSeq pairs = catalog_pair_sequence("CEO", static_cast<int>(order));
  std::vector<IntPoly> values{IntPoly{1}};
  for (int n = 1; n <= static_cast<int>(order); ++n) values.push_back(pairs.at(n).e);
  return egf_from_sequence(values);
}

EGFTable flag_odd_table(std::size_t order) {
  PairSeq pairs = catalog_pair_sequence("CEO", static_cast<int>(order));
  std::vector<IntPoly> values{IntPoly{}};
  for (int n = 1; n <= static_cast<int>(order); ++n) values.push_back(pairs.at(n).o);
  return egf_from_sequence(values);
}

// Ascent-plateau (M) and left ascent-plateau (N) tables assembled from the
// Stirling-permutation pair: M_n = E_n + O_n, N_n = E_n + x*O_n, M_0 = N_0 = 1.
EGFTable plateau_table(std::size_t order, bool left) {
  PairSeq pairs = catalog_pair_sequence("LEO", static_cast<int>(order));
  std::vector<IntPoly> values{IntPoly{1}};
  for (int n = 1; n <= static_cast<int>(order); ++n) {
    const PolyPair& p = pairs.at(n);
    values.push_back(left ? p.e + shift_up(p.o, 1) : p.e + p.o);
  }
  return egf_from_sequence(values);
}

const RatPoly kOne{Rat(1)};
const RatPoly kX{Rat(0), Rat(1)};

}  // namespace

const std::vector<std::string>& series_check_names() {
  static const std::vector<std::string> names = {
      "A-CLOSED", "B-CLOSED", "CE-CLOSED", "CO-CLOSED", "THM18-A2Z", "THM18-B",
      "CONV-2A",  "CONV-B",   "C-SCALE",   "M-SQUARED", "N-SQUARED"};
  return names;
}

SeriesReport run_series_check(const std::string& name, std::size_t order) {
  const RatPoly x_minus_1 = kX - kOne;
  const RatPoly one_minus_x = kOne - kX;
  SeriesReport rep;
  if (name == "A-CLOSED") {
    // A * (x - e^((x-1)z)) = x - 1
    EGFTable lhs = egf_mul(catalog_table("A", order),
                           egf_sub(egf_const(kX, order), egf_exp_linear(x_minus_1, order)));
    rep = verify_series_identity(lhs, egf_const(x_minus_1, order));
  } else if (name == "B-CLOSED") {
    // B * (1 - x*e^(2(1-x)z)) = (1-x)*e^((1-x)z)
    EGFTable lhs = egf_mul(
        catalog_table("B", order),
        egf_sub(egf_const(kOne, order),
                egf_scale(egf_exp_linear(RatPoly{Rat(2)} * one_minus_x, order), kX)));
    rep = verify_series_identity(lhs, egf_scale(egf_exp_linear(one_minus_x, order), one_minus_x));
  } else if (name == "CE-CLOSED") {
    // E * (x - e^(2(x-1)z)) = x - e^((x-1)z)
    EGFTable lhs = egf_mul(
        flag_even_table(order),
        egf_sub(egf_const(kX, order), egf_exp_linear(RatPoly{Rat(2)} * x_minus_1, order)));
    EGFTable rhs = egf_sub(egf_const(kX, order), egf_exp_linear(x_minus_1, order));
    rep = verify_series_identity(lhs, rhs);
  } else if (name == "CO-CLOSED") {
    // O * (e^(2(x-1)z) - x) = 1 - e^((x-1)z)
    EGFTable lhs = egf_mul(
        flag_odd_table(order),
        egf_sub(egf_exp_linear(RatPoly{Rat(2)} * x_minus_1, order), egf_const(kX, order)));
    EGFTable rhs = egf_sub(egf_const(kOne, order), egf_exp_linear(x_minus_1, order));
    rep = verify_series_identity(lhs, rhs);
  } else if (name == "THM18-A2Z") {
    // A(x,2z) = E(x,z) * A(x,z)
    EGFTable a = catalog_table("A", order);
    rep = verify_series_identity(egf_scale_z(a, RatPoly{Rat(2)}), egf_mul(flag_even_table(order), a));
  } else if (name == "THM18-B") {
    // B(x,z) = (1 + x*O(x,z)) * A(x,z)
    EGFTable factor = egf_add(egf_const(kOne, order), egf_scale(flag_odd_table(order), kX));
    rep = verify_series_identity(catalog_table("B", order),
                                 egf_mul(factor, catalog_table("A", order)));
  } else if (name == "CONV-2A") {
    // 2^n A_n = sum_k C(n,k) A_k E_(n-k), entrywise
    EGFTable a = catalog_table("A", order);
    std::vector<RatPoly> doubled;
    Rat power(1);
    for (std::size_t n = 0; n <= order; ++n) {
      doubled.push_back(RatPoly{power} * a.entry(n));
      power *= 2;
    }
    rep = verify_series_identity(EGFTable(order, std::move(doubled)),
                                 egf_mul(a, flag_even_table(order)));
  } else if (name == "CONV-B") {
    // B_n = A_n + x * sum_k C(n,k) A_k O_(n-k)
    EGFTable a = catalog_table("A", order);
    EGFTable rhs = egf_add(a, egf_scale(egf_mul(a, flag_odd_table(order)), kX));
    rep = verify_series_identity(catalog_table("B", order), rhs);
  } else if (name == "C-SCALE") {
    // C(x,z) = A(x,(1+x)z)
    rep = verify_series_identity(catalog_table("C", order),
                                 egf_scale_z(catalog_table("A", order), kOne + kX));
  } else if (name == "M-SQUARED") {
    // M^2 * (x - e^(2t(x-1))) = x - 1
    EGFTable m = plateau_table(order, false);
    EGFTable lhs = egf_mul(
        egf_mul(m, m),
        egf_sub(egf_const(kX, order), egf_exp_linear(RatPoly{Rat(2)} * x_minus_1, order)));
    rep = verify_series_identity(lhs, egf_const(x_minus_1, order));
  } else if (name == "N-SQUARED") {
    // N^2 * (1 - x*e^(2t(1-x))) = 1 - x
    EGFTable n = plateau_table(order, true);
    EGFTable lhs = egf_mul(
        egf_mul(n, n),
        egf_sub(egf_const(kOne, order),
                egf_scale(egf_exp_linear(RatPoly{Rat(2)} * one_minus_x, order), kX)));
    rep = verify_series_identity(lhs, egf_const(one_minus_x, order));
  } else {
    throw std::invalid_argument("unknown series check \"" + name + "\"");
  }
  rep.name = name;
  rep.order = order;
  return rep;
}

}  // namespace eupair
