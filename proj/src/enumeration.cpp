#include "eupair/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "json.hpp"

namespace eupair {

std::string to_string(Family f) {
  switch (f) {
    case Family::sym: return "sym";
    case Family::all_signed: return "signed";
    case Family::even_signed: return "even_signed";
    case Family::stirling: return "stirling";
  }
  return "?";
}

std::string to_string(Stat s) {
  switch (s) {
    case Stat::des_A: return "des_A";
    case Stat::des_B: return "des_B";
    case Stat::des_D: return "des_D";
    case Stat::fdes: return "fdes";
    case Stat::neg: return "neg";
    case Stat::exc_A: return "exc_A";
    case Stat::fexc: return "fexc";
    case Stat::ipk: return "ipk";
    case Stat::lpk: return "lpk";
    case Stat::udrun: return "udrun";
    case Stat::pk: return "pk";
    case Stat::val: return "val";
    case Stat::altrun: return "altrun";
    case Stat::ap: return "ap";
    case Stat::lap: return "lap";
    case Stat::fap: return "fap";
  }
  return "?";
}

std::string to_string(Filter f) {
  switch (f) {
    case Filter::none: return "none";
    case Filter::first_positive: return "first_positive";
    case Filter::first_negative: return "first_negative";
    case Filter::last_positive: return "last_positive";
    case Filter::last_negative: return "last_negative";
    case Filter::stirling_plus: return "stirling_plus";
    case Filter::stirling_minus: return "stirling_minus";
    case Filter::sym_desc_end: return "sym_desc_end";
    case Filter::sym_asc_end: return "sym_asc_end";
  }
  return "?";
}

namespace {

template <typename E>
std::optional<E> parse_enum(const std::string& name, std::initializer_list<E> values) {
  for (E v : values)
    if (to_string(v) == name) return v;
  return std::nullopt;
}

}  // namespace

std::optional<Family> parse_family(const std::string& name) {
  if (name == "all_signed") return Family::all_signed;
  return parse_enum(name, {Family::sym, Family::all_signed, Family::even_signed, Family::stirling});
}

std::optional<Stat> parse_stat(const std::string& name) {
  return parse_enum(name, {Stat::des_A, Stat::des_B, Stat::des_D, Stat::fdes, Stat::neg,
                           Stat::exc_A, Stat::fexc, Stat::ipk, Stat::lpk, Stat::udrun, Stat::pk,
                           Stat::val, Stat::altrun, Stat::ap, Stat::lap, Stat::fap});
}

std::optional<Filter> parse_filter(const std::string& name) {
  return parse_enum(name, {Filter::none, Filter::first_positive, Filter::first_negative,
                           Filter::last_positive, Filter::last_negative, Filter::stirling_plus,
                           Filter::stirling_minus, Filter::sym_desc_end, Filter::sym_asc_end});
}

bool stat_applies(Stat s, Family f) {
  switch (s) {
    case Stat::des_A:
    case Stat::exc_A:
      return f != Family::stirling;
    case Stat::ipk:
    case Stat::lpk:
    case Stat::udrun:
      return f == Family::sym;
    case Stat::des_B:
    case Stat::fdes:
    case Stat::neg:
    case Stat::fexc:
    case Stat::pk:
    case Stat::val:
    case Stat::altrun:
      return f == Family::all_signed || f == Family::even_signed;
    case Stat::des_D:
      return f == Family::even_signed;
    case Stat::ap:
    case Stat::lap:
    case Stat::fap:
      return f == Family::stirling;
  }
  return false;
}

bool filter_applies(Filter f, Family fam, int n) {
  switch (f) {
    case Filter::none:
      return true;
    case Filter::first_positive:
    case Filter::first_negative:
    case Filter::last_positive:
    case Filter::last_negative:
      return (fam == Family::all_signed || fam == Family::even_signed) && n >= 1;
    case Filter::stirling_plus:
    case Filter::stirling_minus:
      return fam == Family::stirling && n >= 1;
    case Filter::sym_desc_end:
    case Filter::sym_asc_end:
      return fam == Family::sym && n >= 1;
  }
  return false;
}

bool filter_accepts(Filter f, const Word& w) {
  switch (f) {
    case Filter::none:
      return true;
    case Filter::first_positive:
      return w.front() > 0;
    case Filter::first_negative:
      return w.front() < 0;
    case Filter::last_positive:
      return w.back() > 0;
    case Filter::last_negative:
      return w.back() < 0;
    case Filter::stirling_plus:
      return w[0] < w[1];
    case Filter::stirling_minus:
      return w[0] == w[1];
    case Filter::sym_desc_end: {
      int prev = w.size() >= 2 ? w[w.size() - 2] : 0;
      return prev > w.back();
    }
    case Filter::sym_asc_end: {
      int prev = w.size() >= 2 ? w[w.size() - 2] : 0;
      return prev < w.back();
    }
  }
  return false;
}

namespace {

int descents(const Word& w, std::optional<int> prefix) {
  int count = 0;
  bool have_prev = prefix.has_value();
  int prev = prefix.value_or(0);
  for (int v : w) {
    if (have_prev && prev > v) ++count;
    prev = v;
    have_prev = true;
  }
  return count;
}

// Peaks (or valleys) of the 0-prepended word, excluding the last position.
int left_extrema(const Word& w, bool peaks) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    int left = i == 0 ? 0 : w[i - 1];
    bool hit = peaks ? (left < w[i] && w[i] > w[i + 1]) : (left > w[i] && w[i] < w[i + 1]);
    if (hit) ++count;
  }
  return count;
}

// Maximal monotone runs of (0, w_1, ..., w_n); zero for the empty word.
int runs_prepended(const Word& w) {
  if (w.empty()) return 0;
  int runs = 1;
  int dir = w[0] > 0 ? 1 : -1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    int d = w[i] > w[i - 1] ? 1 : -1;
    if (d != dir) {
      ++runs;
      dir = d;
    }
  }
  return runs;
}

int negatives(const Word& w) {
  int count = 0;
  for (int v : w)
    if (v < 0) ++count;
  return count;
}

int excedances(const Word& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > static_cast<int>(i) + 1) ++count;
  return count;
}

int ascent_plateaus(const Word& w, bool prepend_zero) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    int left = i == 0 ? (prepend_zero ? 0 : w[0]) : w[i - 1];
    if (i == 0 && !prepend_zero) continue;  // interior plateaus need a left neighbor
    if (left < w[i] && w[i] == w[i + 1]) ++count;
  }
  return count;
}

}  // namespace

long statistic(Stat s, const Word& w) {
  switch (s) {
    case Stat::des_A:
      return descents(w, std::nullopt);
    case Stat::des_B:
      return descents(w, 0);
    case Stat::des_D:
      // pi(0) = -pi(2); for n < 2 the clause is vacuous and only the
      // window's own descents (none, for n <= 1) remain.
      if (w.size() < 2) return descents(w, std::nullopt);
      return descents(w, -w[1]);
    case Stat::fdes:
      return 2 * descents(w, std::nullopt) + (!w.empty() && w.front() < 0 ? 1 : 0);
    case Stat::neg:
      return negatives(w);
    case Stat::exc_A:
      return excedances(w);
    case Stat::fexc:
      return 2 * excedances(w) + negatives(w);
    case Stat::ipk: {
      int count = 0;
      for (std::size_t i = 1; i + 1 < w.size(); ++i)
        if (w[i - 1] < w[i] && w[i] > w[i + 1]) ++count;
      return count;
    }
    case Stat::lpk:
    case Stat::pk:
      return left_extrema(w, true);
    case Stat::val:
      return left_extrema(w, false);
    case Stat::udrun:
    case Stat::altrun:
      return runs_prepended(w);
    case Stat::ap:
      return ascent_plateaus(w, false);
    case Stat::lap:
      return ascent_plateaus(w, true);
    case Stat::fap:
      return 2 * ascent_plateaus(w, false) + (w.size() >= 2 && w[0] == w[1] ? 1 : 0);
  }
  throw std::logic_error("unreachable statistic");
}

namespace {

void generate_signed(int n, bool even_only, Filter filter, const std::function<void(const Word&)>& fn) {
  Word perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  Word w(n);
  do {
    const unsigned masks = 1u << n;
    for (unsigned mask = 0; mask < masks; ++mask) {
      if (even_only && (std::popcount(mask) & 1u)) continue;
      for (int i = 0; i < n; ++i) w[i] = (mask >> i) & 1u ? -perm[i] : perm[i];
      if (filter_accepts(filter, w)) fn(w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void generate_stirling_rec(Word& w, int level, int n, Filter filter,
                           const std::function<void(const Word&)>& fn) {
  if (level == n) {
    if (filter_accepts(filter, w)) fn(w);
    return;
  }
  // A Stirling permutation on level letters has 2*level + 1 gaps; the pair
  // (level+1, level+1) goes into any one of them.
  for (int gap = 0; gap <= 2 * level; ++gap) {
    w.insert(w.begin() + gap, 2, level + 1);
    generate_stirling_rec(w, level + 1, n, filter, fn);
    w.erase(w.begin() + gap, w.begin() + gap + 2);
  }
}

}  // namespace

void generate(Family family, int n, Filter filter, const std::function<void(const Word&)>& fn) {
  if (n < 0) throw std::invalid_argument("generate: n must be >= 0");
  if (n > 0 && !filter_applies(filter, family, n))
    throw std::invalid_argument("filter " + to_string(filter) + " does not apply to family " +
                                to_string(family));
  if (n == 0) {
    if (filter != Filter::none)
      throw std::invalid_argument("filters need n >= 1");
    Word w;
    fn(w);
    return;
  }
  switch (family) {
    case Family::sym: {
      Word perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i + 1;
      do {
        if (filter_accepts(filter, perm)) fn(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    case Family::all_signed:
      generate_signed(n, false, filter, fn);
      return;
    case Family::even_signed:
      generate_signed(n, true, filter, fn);
      return;
    case Family::stirling: {
      Word w;
      generate_stirling_rec(w, 0, n, filter, fn);
      return;
    }
  }
}

std::vector<Word> generate_all(Family family, int n, Filter filter) {
  std::vector<Word> out;
  generate(family, n, filter, [&out](const Word& w) { out.push_back(w); });
  return out;
}

Int family_size(Family family, int n) {
  switch (family) {
    case Family::sym:
      return factorial(static_cast<unsigned>(n));
    case Family::all_signed:
      return ipow(2, static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n));
    case Family::even_signed:
      if (n == 0) return 1;
      return ipow(2, static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(n));
    case Family::stirling: {
      Int result = 1;
      for (int k = 3; k <= 2 * n - 1; k += 2) result *= k;
      return result;
    }
  }
  return 0;
}

Int JointDistribution::total() const {
  Int sum = 0;
  for (const auto& [key, count] : entries) sum += count;
  return sum;
}

JointDistribution joint_distribution(Family family, int n, Filter filter, std::vector<Stat> stats) {
  for (Stat s : stats)
    if (!stat_applies(s, family))
      throw std::invalid_argument("statistic " + to_string(s) + " does not apply to family " +
                                  to_string(family));
  JointDistribution dist;
  dist.family = family;
  dist.n = n;
  dist.filter = filter;
  dist.stats = std::move(stats);
  std::vector<int> key(dist.stats.size());
  generate(family, n, filter, [&](const Word& w) {
    for (std::size_t i = 0; i < dist.stats.size(); ++i)
      key[i] = static_cast<int>(statistic(dist.stats[i], w));
    auto it = dist.entries.find(key);
    if (it == dist.entries.end())
      dist.entries.emplace(key, 1);
    else
      ++it->second;
  });
  return dist;
}

namespace {

std::size_t axis_index(const JointDistribution& dist, Stat axis) {
  for (std::size_t i = 0; i < dist.stats.size(); ++i)
    if (dist.stats[i] == axis) return i;
  throw std::invalid_argument("statistic " + to_string(axis) + " is not part of the distribution");
}

}  // namespace

IntPoly stat_poly(const JointDistribution& dist, Stat axis) {
  std::size_t idx = axis_index(dist, axis);
  std::vector<Int> coeffs;
  for (const auto& [key, count] : dist.entries) {
    std::size_t k = static_cast<std::size_t>(key[idx]);
    if (coeffs.size() <= k) coeffs.resize(k + 1, Int(0));
    coeffs[k] += count;
  }
  return IntPoly(std::move(coeffs));
}

IntPoly stat_poly(const JointDistribution& dist, Stat axis, Stat weight_stat, const Int& q) {
  std::size_t idx = axis_index(dist, axis);
  std::size_t widx = axis_index(dist, weight_stat);
  std::vector<Int> coeffs;
  for (const auto& [key, count] : dist.entries) {
    std::size_t k = static_cast<std::size_t>(key[idx]);
    if (coeffs.size() <= k) coeffs.resize(k + 1, Int(0));
    coeffs[k] += count * ipow(q, static_cast<unsigned>(key[widx]));
  }
  return IntPoly(std::move(coeffs));
}

std::string to_json(const JointDistribution& dist) {
  nlohmann::json j;
  j["family"] = to_string(dist.family);
  j["n"] = dist.n;
  j["filter"] = to_string(dist.filter);
  j["stats"] = nlohmann::json::array();
  for (Stat s : dist.stats) j["stats"].push_back(to_string(s));
  j["entries"] = nlohmann::json::array();
  for (const auto& [key, count] : dist.entries) {
    nlohmann::json e;
    e["key"] = key;
    e["count"] = count.str();
    j["entries"].push_back(std::move(e));
  }
  return j.dump();
}

Word phi_map(const Word& w) {
  if (w.empty() || w.front() < 0)
    throw std::invalid_argument("phi_map: the first letter must be positive");
  if (w.back() > 0) return w;
  std::size_t k = 0;
  while (k + 1 < w.size() && !(w[k] > 0 && w[k + 1] < 0)) ++k;
  // w[k] > 0 > w[k+1] exists: the first letter is positive, the last is not.
  Word out(w.begin() + k + 1, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k + 1);
  return out;
}

}  // namespace eupair
