#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eupair/coeff_family.hpp"
#include "eupair/int_poly.hpp"

namespace eupair {

// Single Eulerian-style recurrence  F_{n+1} = alpha_n F_n + beta_n F_n',
// valid from start_index, with F_{start_index} = initial.
struct RecurrenceSpec {
  std::string name;
  CoeffFamily alpha, beta;
  IntPoly initial;
  int start_index = 0;

  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

// Coupled pair system
//   E_{n+1} = p_n E_n + q_n E_n' + r_n O_n
//   O_{n+1} = u_n O_n + v_n O_n' + w_n E_n
// with (E, O) starting from (e_initial, o_initial) at start_index.
struct PairSystemSpec {
  std::string name;
  CoeffFamily p, q, r, u, v, w;
  IntPoly e_initial, o_initial;
  int start_index = 0;

  friend bool operator==(const PairSystemSpec&, const PairSystemSpec&) = default;
};

// Contiguous run of polynomials F_{start_index}, ..., indexed by n.
struct PolySeq {
  int start_index = 0;
  std::vector<IntPoly> values;

  int last_index() const { return start_index + static_cast<int>(values.size()) - 1; }
  const IntPoly& at(int n) const;
};

struct PairSeq {
  int start_index = 0;
  std::vector<PolyPair> values;

  int last_index() const { return start_index + static_cast<int>(values.size()) - 1; }
  const PolyPair& at(int n) const;
};

PolySeq iterate_single(const RecurrenceSpec& spec, int n_max);
PairSeq iterate_pair(const PairSystemSpec& spec, int n_max);

// Builds the coupled system equivalent to a single recurrence whose beta
// has no even-exponent part: writing x*alpha_n(x) = x*p_n(x^2) + r_n(x^2)
// and 2x*beta_n(x) = q_n(x^2) determines (p, q, r); then u = p + q/(2x),
// v = q, w = r/x. Initial data comes from hb_split of the single
// recurrence's initial polynomial. Throws std::invalid_argument when beta
// has a nonzero even part (no such system exists).
PairSystemSpec derive_pair(const RecurrenceSpec& spec);
PairSystemSpec derive_pair(const CoeffFamily& alpha, const CoeffFamily& beta,
                           const IntPoly& e_initial, const IntPoly& o_initial,
                           int start_index, const std::string& name);

struct DualityReport {
  bool ok = false;
  int checked_from = 0, checked_to = 0;
  struct Mismatch {
    int n;
    IntPoly single_value, joined_value;
  };
  std::optional<Mismatch> mismatch;
};

// Checks F_n == e_n(x^2) + x*o_n(x^2) for all n up to n_max. The pair may
// start later than the single recurrence; hb_split of the single sequence
// at the pair's start index must equal the pair initials.
DualityReport verify_duality(const RecurrenceSpec& single, const PairSystemSpec& pair, int n_max);

}  // namespace eupair
