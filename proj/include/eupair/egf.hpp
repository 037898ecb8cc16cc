#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eupair/rat_poly.hpp"

namespace eupair {

// Truncated exponential generating function in z: entry n is the
// coefficient polynomial of z^n/n!, kept through order N inclusive.
class EGFTable {
 public:
  EGFTable(std::size_t order, std::vector<RatPoly> entries);

  std::size_t order() const { return entries_.size() - 1; }
  const RatPoly& entry(std::size_t n) const;

  friend bool operator==(const EGFTable&, const EGFTable&) = default;

 private:
  std::vector<RatPoly> entries_;
};

EGFTable egf_from_sequence(const std::vector<IntPoly>& polys);
// c + 0*z + 0*z^2 + ...
EGFTable egf_const(const RatPoly& c, std::size_t order);
// e^(c*z): entry n = c^n.
EGFTable egf_exp_linear(const RatPoly& c, std::size_t order);
// Product series: entry n = sum_k C(n,k) a_k b_(n-k).
EGFTable egf_mul(const EGFTable& a, const EGFTable& b);
// Substitution z -> s*z: entry n = s^n * a_n.
EGFTable egf_scale_z(const EGFTable& a, const RatPoly& s);
EGFTable egf_add(const EGFTable& a, const EGFTable& b);
EGFTable egf_sub(const EGFTable& a, const EGFTable& b);
// Entrywise scaling by a fixed polynomial.
EGFTable egf_scale(const EGFTable& a, const RatPoly& c);

// One line per entry: "n: <polynomial>".
std::string egf_dump(const EGFTable& a);

struct SeriesMismatch {
  std::size_t n = 0;
  RatPoly lhs, rhs;
};
struct SeriesReport {
  std::string name;
  std::size_t order = 0;
  bool equal = false;
  std::optional<SeriesMismatch> mismatch;
};
SeriesReport verify_series_identity(const EGFTable& lhs, const EGFTable& rhs);

// Named closed-form identities, all checked in cross-multiplied form so
// that no series division or square root is ever taken.
const std::vector<std::string>& series_check_names();
SeriesReport run_series_check(const std::string& name, std::size_t order);

}  // namespace eupair
