#include "eupair/recurrence.hpp"

#include <stdexcept>

namespace eupair {

const IntPoly& PolySeq::at(int n) const {
  if (n < start_index || n > last_index())
    throw std::out_of_range("sequence index " + std::to_string(n) + " outside [" +
                            std::to_string(start_index) + ", " + std::to_string(last_index()) + "]");
  return values[static_cast<std::size_t>(n - start_index)];
}

const PolyPair& PairSeq::at(int n) const {
  if (n < start_index || n > last_index())
    throw std::out_of_range("sequence index " + std::to_string(n) + " outside [" +
                            std::to_string(start_index) + ", " + std::to_string(last_index()) + "]");
  return values[static_cast<std::size_t>(n - start_index)];
}

PolySeq iterate_single(const RecurrenceSpec& spec, int n_max) {
  if (n_max < spec.start_index)
    throw std::invalid_argument("iterate_single: n_max " + std::to_string(n_max) +
                                " precedes start index " + std::to_string(spec.start_index));
  PolySeq seq{spec.start_index, {spec.initial}};
  seq.values.reserve(static_cast<std::size_t>(n_max - spec.start_index) + 1);
  for (int n = spec.start_index; n < n_max; ++n) {
    const IntPoly& f = seq.values.back();
    seq.values.push_back(spec.alpha.instantiate(n) * f + spec.beta.instantiate(n) * f.derivative());
  }
  return seq;
}

PairSeq iterate_pair(const PairSystemSpec& spec, int n_max) {
  if (n_max < spec.start_index)
    throw std::invalid_argument("iterate_pair: n_max " + std::to_string(n_max) +
                                " precedes start index " + std::to_string(spec.start_index));
  PairSeq seq{spec.start_index, {{spec.e_initial, spec.o_initial}}};
  seq.values.reserve(static_cast<std::size_t>(n_max - spec.start_index) + 1);
  for (int n = spec.start_index; n < n_max; ++n) {
    const auto& [e, o] = seq.values.back();
    IntPoly e_next = spec.p.instantiate(n) * e + spec.q.instantiate(n) * e.derivative() +
                     spec.r.instantiate(n) * o;
    IntPoly o_next = spec.u.instantiate(n) * o + spec.v.instantiate(n) * o.derivative() +
                     spec.w.instantiate(n) * e;
    seq.values.push_back({std::move(e_next), std::move(o_next)});
  }
  return seq;
}

namespace {

// u = p + q/(2x), v = q, w = r/x. The divisions are exact whenever q and r
// have zero constant terms; r coming from the even part of x*alpha always
// does, but the conditions are checked so that hand-built systems fail
// loudly instead of silently truncating.
PairSystemSpec assemble_pair(CoeffFamily p, CoeffFamily q, CoeffFamily r,
                             const IntPoly& e_initial, const IntPoly& o_initial,
                             int start_index, const std::string& name) {
  if (!q.term(0).is_zero())
    throw std::invalid_argument("derive_pair: q has a nonzero constant term, u = p + q/(2x) is not polynomial");
  if (!r.term(0).is_zero())
    throw std::invalid_argument("derive_pair: r has a nonzero constant term, w = r/x is not polynomial");

  std::vector<AffineCoeff> q_half;  // q / (2x)
  for (std::size_t k = 1; k < q.terms().size(); ++k) {
    const auto& t = q.terms()[k];
    if (t.c0 % 2 != 0 || t.c1 % 2 != 0)
      throw std::invalid_argument("derive_pair: q is not divisible by 2");
    q_half.push_back({t.c0 / 2, t.c1 / 2});
  }
  std::vector<AffineCoeff> r_down(r.terms().begin() + (r.is_zero() ? 0 : 1), r.terms().end());

  PairSystemSpec spec;
  spec.name = name;
  spec.u = p + CoeffFamily(std::move(q_half));
  spec.v = q;
  spec.w = CoeffFamily(std::move(r_down));
  spec.p = std::move(p);
  spec.q = std::move(q);
  spec.r = std::move(r);
  spec.e_initial = e_initial;
  spec.o_initial = o_initial;
  spec.start_index = start_index;
  return spec;
}

}  // namespace

PairSystemSpec derive_pair(const CoeffFamily& alpha, const CoeffFamily& beta,
                           const IntPoly& e_initial, const IntPoly& o_initial,
                           int start_index, const std::string& name) {
  auto [beta_e, beta_o] = family_split(beta);
  if (!beta_e.is_zero())
    throw std::invalid_argument("derive_pair: beta has a nonzero even part, the recurrence admits no pair system");
  auto [alpha_e, alpha_o] = family_split(alpha);

  // x*alpha(x) = x*alpha_e(x^2) + x^2*alpha_o(x^2), so p = alpha_e and
  // r = x*alpha_o; 2x*beta(x) = 2x^2*beta_o(x^2) gives q = 2x*beta_o.
  CoeffFamily p = alpha_e;
  CoeffFamily r = shift_up(alpha_o, 1);
  CoeffFamily q = scale(2, shift_up(beta_o, 1));
  return assemble_pair(std::move(p), std::move(q), std::move(r), e_initial, o_initial, start_index, name);
}

PairSystemSpec derive_pair(const RecurrenceSpec& spec) {
  auto [e0, o0] = hb_split(spec.initial);
  return derive_pair(spec.alpha, spec.beta, e0, o0, spec.start_index, spec.name + "-pair");
}

DualityReport verify_duality(const RecurrenceSpec& single, const PairSystemSpec& pair, int n_max) {
  if (pair.start_index < single.start_index)
    throw std::invalid_argument("verify_duality: the pair system starts before the single recurrence");
  if (n_max < pair.start_index)
    throw std::invalid_argument("verify_duality: n_max precedes the pair system's start index");

  PolySeq singles = iterate_single(single, n_max);
  auto [e0, o0] = hb_split(singles.at(pair.start_index));
  if (e0 != pair.e_initial || o0 != pair.o_initial)
    throw std::invalid_argument("verify_duality: hb_split of the single value at index " +
                                std::to_string(pair.start_index) + " does not match the pair initials");

  PairSeq pairs = iterate_pair(pair, n_max);
  DualityReport report;
  report.checked_from = pair.start_index;
  report.checked_to = n_max;
  for (int n = pair.start_index; n <= n_max; ++n) {
    IntPoly joined = hb_join(pairs.at(n).e, pairs.at(n).o);
    if (joined != singles.at(n)) {
      report.ok = false;
      report.mismatch = DualityReport::Mismatch{n, singles.at(n), std::move(joined)};
      return report;
    }
  }
  report.ok = true;
  return report;
}

}  // namespace eupair
