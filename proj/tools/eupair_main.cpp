// Command-line front end: catalog tables, statistic enumeration, pair-system
// derivation from recurrence files, the identity and series suites, and
// polynomial analysis. Exit codes: 0 success / all checks pass, 1 a check
// failed, 2 usage or parse error.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eupair/analyze.hpp"
#include "eupair/catalog.hpp"
#include "eupair/coeff_family.hpp"
#include "eupair/dsl.hpp"
#include "eupair/egf.hpp"
#include "eupair/enumeration.hpp"
#include "eupair/identities.hpp"
#include "eupair/int_poly.hpp"
#include "eupair/numeric.hpp"
#include "eupair/recurrence.hpp"

namespace {

using Json = nlohmann::ordered_json;
using eupair::Int;
using eupair::IntPoly;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& message) {
  std::cerr << "eupair: " << message << "\n";
  return kExitUsage;
}

enum class OutputFormat { text, json, csv, md };

OutputFormat effective_format(const std::string& format, bool json_flag) {
  if (json_flag) return OutputFormat::json;
  if (format == "json") return OutputFormat::json;
  if (format == "csv") return OutputFormat::csv;
  if (format == "md") return OutputFormat::md;
  return OutputFormat::text;
}

Json poly_json(const IntPoly& f) { return Json(eupair::to_decimal_coeffs(f)); }

std::string kind_name(eupair::EntryKind k) {
  switch (k) {
    case eupair::EntryKind::single: return "single";
    case eupair::EntryKind::pair: return "pair";
    case eupair::EntryKind::derived: return "derived";
  }
  return "?";
}

// ---------------------------------------------------------------- compute

struct ComputeOptions {
  std::string name;
  std::optional<int> n;
  bool all = false;
  bool list = false;
  std::string format = "text";
  bool json_flag = false;
};

int run_compute(const ComputeOptions& opt, std::ostream& out) {
  if (opt.list) {
    for (const auto& entry : eupair::catalog())
      out << entry.name << " (" << kind_name(entry.kind) << "): " << entry.description << "\n";
    return kExitOk;
  }
  if (opt.name.empty()) return usage_error("compute needs a sequence name (or --list)");
  const eupair::CatalogEntry* entry = eupair::catalog_find(opt.name);
  if (!entry) return usage_error("unknown sequence '" + opt.name + "' (see compute --list)");
  if (!opt.n) return usage_error("compute needs --n");
  const OutputFormat format = effective_format(opt.format, opt.json_flag);

  if (entry->kind == eupair::EntryKind::pair) {
    eupair::PairSeq seq = eupair::catalog_pair_sequence(entry->name, *opt.n);
    const int from = opt.all ? seq.start_index : *opt.n;
    switch (format) {
      case OutputFormat::json: {
        Json j;
        j["name"] = entry->name;
        j["kind"] = "pair";
        j["start_index"] = seq.start_index;
        j["values"] = Json::array();
        for (int k = from; k <= *opt.n; ++k) {
          Json v;
          v["n"] = k;
          v["e"] = poly_json(seq.at(k).e);
          v["o"] = poly_json(seq.at(k).o);
          j["values"].push_back(std::move(v));
        }
        out << j.dump(2) << "\n";
        break;
      }
      case OutputFormat::csv:
        out << "n,e,o\n";
        for (int k = from; k <= *opt.n; ++k)
          out << k << "," << to_string(seq.at(k).e) << "," << to_string(seq.at(k).o) << "\n";
        break;
      case OutputFormat::md:
        out << "| n | E | O |\n|---|---|---|\n";
        for (int k = from; k <= *opt.n; ++k)
          out << "| " << k << " | " << to_string(seq.at(k).e) << " | " << to_string(seq.at(k).o)
              << " |\n";
        break;
      case OutputFormat::text:
        for (int k = from; k <= *opt.n; ++k) {
          out << "E_" << k << " = " << to_string(seq.at(k).e) << "\n";
          out << "O_" << k << " = " << to_string(seq.at(k).o) << "\n";
        }
        break;
    }
    return kExitOk;
  }

  eupair::PolySeq seq = eupair::catalog_sequence(entry->name, *opt.n);
  const int from = opt.all ? seq.start_index : *opt.n;
  switch (format) {
    case OutputFormat::json: {
      Json j;
      j["name"] = entry->name;
      j["kind"] = kind_name(entry->kind);
      j["start_index"] = seq.start_index;
      j["values"] = Json::array();
      for (int k = from; k <= *opt.n; ++k) {
        Json v;
        v["n"] = k;
        v["coeffs"] = poly_json(seq.at(k));
        j["values"].push_back(std::move(v));
      }
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "n,polynomial\n";
      for (int k = from; k <= *opt.n; ++k) out << k << "," << to_string(seq.at(k)) << "\n";
      break;
    case OutputFormat::md:
      out << "| n | polynomial |\n|---|---|\n";
      for (int k = from; k <= *opt.n; ++k)
        out << "| " << k << " | " << to_string(seq.at(k)) << " |\n";
      break;
    case OutputFormat::text:
      if (!opt.all) {
        out << to_string(seq.at(*opt.n)) << "\n";
      } else {
        for (int k = from; k <= *opt.n; ++k)
          out << entry->name << "_" << k << " = " << to_string(seq.at(k)) << "\n";
      }
      break;
  }
  return kExitOk;
}

// -------------------------------------------------------------- enumerate

struct EnumerateOptions {
  std::string family;
  std::optional<int> n;
  std::vector<std::string> stats;
  std::string filter = "none";
  std::string q;
  std::string format = "text";
  bool json_flag = false;
};

int run_enumerate(const EnumerateOptions& opt, std::ostream& out) {
  auto family = eupair::parse_family(opt.family);
  if (!family)
    return usage_error("unknown family '" + opt.family +
                       "' (sym, signed, even_signed, stirling)");
  auto filter = eupair::parse_filter(opt.filter);
  if (!filter) return usage_error("unknown filter '" + opt.filter + "'");
  if (!opt.n) return usage_error("enumerate needs --n");
  if (opt.stats.empty()) return usage_error("enumerate needs --stats");
  std::vector<eupair::Stat> stats;
  for (const std::string& name : opt.stats) {
    auto stat = eupair::parse_stat(name);
    if (!stat) return usage_error("unknown statistic '" + name + "'");
    if (!eupair::stat_applies(*stat, *family))
      return usage_error("statistic '" + name + "' does not apply to family '" + opt.family + "'");
    stats.push_back(*stat);
  }
  if (!opt.q.empty() && stats.size() < 2)
    return usage_error("--q needs two statistics: an axis and a weight");

  const eupair::JointDistribution dist = eupair::joint_distribution(*family, *opt.n, *filter, stats);
  std::optional<IntPoly> poly;
  if (!opt.q.empty())
    poly = eupair::stat_poly(dist, stats[0], stats[1], Int(opt.q));
  else if (stats.size() == 1)
    poly = eupair::stat_poly(dist, stats[0]);

  switch (effective_format(opt.format, opt.json_flag)) {
    case OutputFormat::json: {
      Json j = Json::parse(eupair::to_json(dist));
      if (!opt.q.empty()) j["q"] = opt.q;
      if (poly) j["poly"] = poly_json(*poly);
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv: {
      for (std::size_t i = 0; i < stats.size(); ++i) out << to_string(stats[i]) << ",";
      out << "count\n";
      for (const auto& [key, count] : dist.entries) {
        for (int v : key) out << v << ",";
        out << count.str() << "\n";
      }
      break;
    }
    case OutputFormat::md: {
      out << "|";
      for (std::size_t i = 0; i < stats.size(); ++i) out << " " << to_string(stats[i]) << " |";
      out << " count |\n|";
      for (std::size_t i = 0; i <= stats.size(); ++i) out << "---|";
      out << "\n";
      for (const auto& [key, count] : dist.entries) {
        out << "|";
        for (int v : key) out << " " << v << " |";
        out << " " << count.str() << " |\n";
      }
      break;
    }
    case OutputFormat::text:
      if (poly) {
        out << to_string(*poly) << "\n";
      } else {
        for (const auto& [key, count] : dist.entries) {
          for (std::size_t i = 0; i < key.size(); ++i)
            out << (i ? " " : "") << to_string(stats[i]) << "=" << key[i];
          out << ": " << count.str() << "\n";
        }
        out << "total: " << dist.total().str() << "\n";
      }
      break;
  }
  return kExitOk;
}

// ----------------------------------------------------------------- derive

struct DeriveOptions {
  std::string path;
  std::optional<int> n;
  bool json_flag = false;
};

int run_derive(const DeriveOptions& opt, std::ostream& out) {
  eupair::ParseResult parsed = eupair::parse_file(opt.path);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) std::cerr << to_string(d, parsed.source_name) << "\n";
    return kExitUsage;
  }
  const eupair::RecurrenceSpec& single = *parsed.spec;

  eupair::PairSystemSpec pair;
  try {
    pair = eupair::derive_pair(single);
  } catch (const std::invalid_argument& e) {
    // Well-formed input whose recurrence admits no coupled system: a failed
    // check, not a usage error.
    std::cerr << "eupair: " << single.name << ": " << e.what() << "\n";
    return kExitCheckFailed;
  }

  std::optional<eupair::DualityReport> duality;
  if (opt.n) {
    if (*opt.n < pair.start_index)
      return usage_error("--n " + std::to_string(*opt.n) + " precedes the start index " +
                         std::to_string(pair.start_index));
    duality = eupair::verify_duality(single, pair, *opt.n);
  }

  if (opt.json_flag) {
    Json j;
    j["name"] = pair.name;
    j["p"] = to_string(pair.p);
    j["q"] = to_string(pair.q);
    j["r"] = to_string(pair.r);
    j["u"] = to_string(pair.u);
    j["v"] = to_string(pair.v);
    j["w"] = to_string(pair.w);
    j["e_initial"] = poly_json(pair.e_initial);
    j["o_initial"] = poly_json(pair.o_initial);
    j["start_index"] = pair.start_index;
    if (duality) {
      Json d;
      d["ok"] = duality->ok;
      d["from"] = duality->checked_from;
      d["to"] = duality->checked_to;
      if (duality->mismatch) {
        Json m;
        m["n"] = duality->mismatch->n;
        m["single"] = poly_json(duality->mismatch->single_value);
        m["joined"] = poly_json(duality->mismatch->joined_value);
        d["mismatch"] = std::move(m);
      }
      j["duality"] = std::move(d);
    } else {
      j["duality"] = nullptr;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "pair " << pair.name << " (start n=" << pair.start_index << ")\n";
    out << "  p = " << to_string(pair.p) << "\n";
    out << "  q = " << to_string(pair.q) << "\n";
    out << "  r = " << to_string(pair.r) << "\n";
    out << "  u = " << to_string(pair.u) << "\n";
    out << "  v = " << to_string(pair.v) << "\n";
    out << "  w = " << to_string(pair.w) << "\n";
    out << "  E_" << pair.start_index << " = " << to_string(pair.e_initial) << "\n";
    out << "  O_" << pair.start_index << " = " << to_string(pair.o_initial) << "\n";
    if (duality) {
      if (duality->ok) {
        out << "duality n=" << duality->checked_from << ".." << duality->checked_to << ": PASS\n";
      } else {
        const auto& m = *duality->mismatch;
        out << "duality FAIL at n=" << m.n << ": " << to_string(m.single_value)
            << " != " << to_string(m.joined_value) << "\n";
      }
    }
  }
  return duality && !duality->ok ? kExitCheckFailed : kExitOk;
}

// ----------------------------------------------------------------- verify

struct VerifyOptions {
  std::string name;
  std::optional<int> n_max;
  bool list = false;
  bool json_flag = false;
};

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  if (opt.list) {
    for (const auto& info : eupair::identity_checks())
      out << info.name << " (default n<=" << info.default_n_max << "): " << info.summary << "\n";
    return kExitOk;
  }
  if (opt.name.empty()) return usage_error("verify needs an identity name or 'all' (or --list)");

  std::vector<eupair::IdentityReport> reports;
  if (opt.name == "all") {
    std::map<std::string, int> budgets;
    if (opt.n_max)
      for (const auto& info : eupair::identity_checks()) budgets[info.name] = *opt.n_max;
    reports = eupair::verify_all(budgets);
  } else if (eupair::is_identity(opt.name)) {
    reports.push_back(opt.n_max ? eupair::verify(opt.name, *opt.n_max) : eupair::verify(opt.name));
  } else {
    return usage_error("unknown identity '" + opt.name + "' (see verify --list)");
  }

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;

  if (opt.json_flag) {
    Json j;
    j["reports"] = Json::array();
    for (const auto& r : reports) {
      Json e;
      e["name"] = r.name;
      e["n_max"] = r.n_max;
      e["pass"] = r.pass;
      if (r.witness) {
        Json w;
        w["n"] = r.witness->n;
        w["lhs"] = r.witness->lhs;
        w["rhs"] = r.witness->rhs;
        w["note"] = r.witness->note;
        e["witness"] = std::move(w);
      } else {
        e["witness"] = nullptr;
      }
      j["reports"].push_back(std::move(e));
    }
    j["all_pass"] = all_pass;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << eupair::report_line(r) << "\n";
      if (!r.pass && r.witness) {
        const auto& w = *r.witness;
        out << "  at n=" << w.n;
        if (!w.note.empty()) out << " [" << w.note << "]";
        if (!w.lhs.empty() || !w.rhs.empty()) out << ": " << w.lhs << " != " << w.rhs;
        out << "\n";
      }
    }
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOptions {
  std::string target;
  std::optional<int> n;
  std::vector<std::string> checks;
  std::optional<int> window;
  unsigned nu = 0;
  bool json_flag = false;
};

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> kChecks = {
      "symmetric", "unimodal", "alternating", "gamma", "semigamma",
      "roots",     "interlace", "hurwitz",    "hb"};
  return kChecks;
}

std::string root_interval_string(const eupair::IsolatedRoot& r) {
  std::string s = r.exact ? "x=" + r.lo.str() : "(" + r.lo.str() + ", " + r.hi.str() + "]";
  if (r.multiplicity > 1) s += " mult " + std::to_string(r.multiplicity);
  return s;
}

Json int_values_json(const std::vector<Int>& values) {
  Json a = Json::array();
  for (const Int& v : values) a.push_back(v.str());
  return a;
}

// One polynomial against the selected checks. Window defaults: the degree
// for symmetry/alternation/gamma, the smallest plausible bound ceil(deg/2)
// for the semi-gamma expansion.
Json analyze_poly(const IntPoly& f, const std::vector<std::string>& checks,
                  std::optional<int> window, unsigned nu) {
  Json j;
  j["poly"] = poly_json(f);
  const std::size_t deg = f.is_zero() ? 0 : *f.degree();
  const std::size_t full_window = window ? static_cast<std::size_t>(*window) : deg;
  for (const std::string& c : checks) {
    Json r;
    if (c == "symmetric") {
      r["window"] = full_window;
      r["value"] = eupair::is_symmetric(f, full_window);
    } else if (c == "unimodal") {
      auto rep = eupair::is_unimodal(f);
      r["value"] = rep.unimodal;
      if (rep.mode) {
        r["mode_lo"] = rep.mode->first;
        r["mode_hi"] = rep.mode->second;
      }
    } else if (c == "alternating") {
      r["window"] = full_window;
      r["value"] = eupair::is_alternatingly_increasing(f, full_window);
    } else if (c == "gamma") {
      r["window"] = full_window;
      try {
        r["values"] = int_values_json(eupair::gamma_vector(f, full_window).values);
      } catch (const std::invalid_argument& e) {
        r["error"] = e.what();
      }
    } else if (c == "semigamma") {
      const std::size_t w = window ? static_cast<std::size_t>(*window) : (deg + 1) / 2;
      r["window"] = w;
      r["nu"] = nu;
      try {
        r["values"] = int_values_json(eupair::semi_gamma_vector(f, nu, w).values);
      } catch (const std::invalid_argument& e) {
        r["error"] = e.what();
      }
    } else if (c == "roots") {
      auto rep = eupair::root_report(f);
      r["real_root_count"] = rep.real_root_count;
      r["all_real"] = rep.all_real;
      r["all_nonpositive"] = rep.all_nonpositive;
      r["zero_is_root"] = rep.zero_is_root;
      Json intervals = Json::array();
      for (const auto& root : rep.roots) intervals.push_back(root_interval_string(root));
      r["intervals"] = std::move(intervals);
    } else if (c == "interlace") {
      auto [even, odd] = eupair::hb_split(f);
      if (even.is_zero() || odd.is_zero())
        r["error"] = "zero even or odd part";
      else if (even.leading() <= 0 || odd.leading() <= 0)
        r["error"] = "leading coefficients must be positive";
      else
        r["value"] = eupair::interlaces(odd, even);
    } else if (c == "hurwitz") {
      auto rep = eupair::hurwitz_stable(f, /*strip_origin=*/true);
      r["stable"] = rep.stable;
      r["zero_pivot"] = rep.zero_pivot;
      r["origin_root"] = rep.origin_root;
      r["stripped_origin_power"] = rep.stripped_origin_power;
    } else if (c == "hb") {
      auto rep = eupair::hermite_biehler_check(f);
      r["stable"] = rep.stable;
      r["split_ok"] = rep.split_ok;
      r["e_standard"] = rep.e_standard;
      r["o_standard"] = rep.o_standard;
      r["e_roots_real_nonpositive"] = rep.e_roots_real_nonpositive;
      r["o_roots_real_nonpositive"] = rep.o_roots_real_nonpositive;
      r["o_interlaces_e"] = rep.o_interlaces_e;
      r["boundary"] = rep.boundary;
      r["agree"] = rep.agree;
    }
    j[c] = std::move(r);
  }
  return j;
}

void print_check_line(std::ostream& out, const std::string& name, const Json& r) {
  out << "  " << name << ":";
  for (auto it = r.begin(); it != r.end(); ++it) {
    out << " " << it.key() << "=";
    const Json& v = it.value();
    if (v.is_boolean()) {
      out << (v.get<bool>() ? "yes" : "no");
    } else if (v.is_string()) {
      out << v.get<std::string>();
    } else if (v.is_array()) {
      out << "[";
      bool first = true;
      for (const auto& e : v) {
        if (!first) out << "; ";
        first = false;
        out << (e.is_string() ? e.get<std::string>() : e.dump());
      }
      out << "]";
    } else {
      out << v.dump();
    }
  }
  out << "\n";
}

void print_analysis(std::ostream& out, const std::string& label, const IntPoly& f,
                    const std::vector<std::string>& checks, const Json& a) {
  out << label << " = " << to_string(f) << "\n";
  for (const std::string& c : checks)
    if (a.contains(c)) print_check_line(out, c, a[c]);
}

int run_analyze(const AnalyzeOptions& opt, std::ostream& out) {
  std::vector<std::string> checks = opt.checks.empty() ? known_checks() : opt.checks;
  for (const std::string& c : checks)
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
      return usage_error("unknown check '" + c + "'");
  if (!opt.n) return usage_error("analyze needs --n");
  if (opt.window && *opt.window < 0) return usage_error("--window must be nonnegative");
  if (opt.nu > 1) return usage_error("--nu must be 0 or 1");

  const eupair::CatalogEntry* entry = eupair::catalog_find(opt.target);
  if (entry && entry->kind == eupair::EntryKind::pair) {
    eupair::PairSeq seq = eupair::catalog_pair_sequence(opt.target, *opt.n);
    const auto& [e, o] = seq.at(*opt.n);
    Json je = analyze_poly(e, checks, opt.window, opt.nu);
    Json jo = analyze_poly(o, checks, opt.window, opt.nu);
    std::optional<bool> cross;
    if (!e.is_zero() && !o.is_zero() && e.leading() > 0 && o.leading() > 0)
      cross = eupair::interlaces(o, e);
    if (opt.json_flag) {
      Json j;
      j["target"] = opt.target;
      j["n"] = *opt.n;
      j["e"] = std::move(je);
      j["o"] = std::move(jo);
      if (cross)
        j["o_interlaces_e"] = *cross;
      else
        j["o_interlaces_e"] = nullptr;
      out << j.dump(2) << "\n";
    } else {
      print_analysis(out, "E_" + std::to_string(*opt.n), e, checks, je);
      print_analysis(out, "O_" + std::to_string(*opt.n), o, checks, jo);
      if (cross) out << "o_interlaces_e: " << (*cross ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }

  IntPoly f;
  std::string label;
  if (entry) {
    f = eupair::catalog_sequence(opt.target, *opt.n).at(*opt.n);
    label = opt.target + "_" + std::to_string(*opt.n);
  } else if (std::filesystem::exists(opt.target)) {
    eupair::ParseResult parsed = eupair::parse_file(opt.target);
    if (!parsed.ok()) {
      for (const auto& d : parsed.diagnostics)
        std::cerr << to_string(d, parsed.source_name) << "\n";
      return kExitUsage;
    }
    f = eupair::iterate_single(*parsed.spec, *opt.n).at(*opt.n);
    label = parsed.spec->name + "_" + std::to_string(*opt.n);
  } else {
    return usage_error("unknown sequence '" + opt.target +
                       "' and no such file (see compute --list)");
  }

  if (f.is_zero()) {
    if (opt.json_flag) {
      Json j;
      j["target"] = opt.target;
      j["n"] = *opt.n;
      j["label"] = label;
      j["analysis"] = {{"poly", poly_json(f)}, {"zero", true}};
      out << j.dump(2) << "\n";
    } else {
      out << label << " = 0 (nothing to analyze)\n";
    }
    return kExitOk;
  }

  Json a = analyze_poly(f, checks, opt.window, opt.nu);
  if (opt.json_flag) {
    Json j;
    j["target"] = opt.target;
    j["n"] = *opt.n;
    j["label"] = label;
    j["analysis"] = std::move(a);
    out << j.dump(2) << "\n";
  } else {
    print_analysis(out, label, f, checks, a);
  }
  return kExitOk;
}

// ----------------------------------------------------------------- series

struct SeriesOptions {
  std::string name;
  std::size_t order = 8;
  bool list = false;
  bool json_flag = false;
};

int run_series(const SeriesOptions& opt, std::ostream& out) {
  const auto& known = eupair::series_check_names();
  if (opt.list) {
    for (const auto& name : known) out << name << "\n";
    return kExitOk;
  }
  if (opt.name.empty()) return usage_error("series needs an identity name or 'all' (or --list)");
  std::vector<std::string> names;
  if (opt.name == "all")
    names = known;
  else if (std::find(known.begin(), known.end(), opt.name) != known.end())
    names = {opt.name};
  else
    return usage_error("unknown series identity '" + opt.name + "' (see series --list)");

  bool all_pass = true;
  Json reports = Json::array();
  for (const auto& name : names) {
    eupair::SeriesReport rep = eupair::run_series_check(name, opt.order);
    all_pass = all_pass && rep.equal;
    if (opt.json_flag) {
      Json e;
      e["name"] = rep.name;
      e["order"] = rep.order;
      e["equal"] = rep.equal;
      if (rep.mismatch) {
        Json m;
        m["n"] = rep.mismatch->n;
        m["lhs"] = to_string(rep.mismatch->lhs);
        m["rhs"] = to_string(rep.mismatch->rhs);
        e["mismatch"] = std::move(m);
      } else {
        e["mismatch"] = nullptr;
      }
      reports.push_back(std::move(e));
    } else {
      out << rep.name << " order=" << rep.order << (rep.equal ? " PASS" : " FAIL") << "\n";
      if (!rep.equal && rep.mismatch)
        out << "  at z^" << rep.mismatch->n << ": " << to_string(rep.mismatch->lhs)
            << " != " << to_string(rep.mismatch->rhs) << "\n";
    }
  }
  if (opt.json_flag) {
    Json j;
    j["reports"] = std::move(reports);
    j["all_pass"] = all_pass;
    out << j.dump(2) << "\n";
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact tables for derivative recurrences, their coupled even/odd systems, "
      "statistic enumeration over permutation families, and polynomial analysis",
      "eupair"};
  app.require_subcommand(1);
  app.footer("EUPAIR_JOBS sets the parallel fan-out for 'verify all' (default 1).");

  std::string out_path;

  ComputeOptions compute_opts;
  CLI::App* compute = app.add_subcommand("compute", "print catalog polynomials");
  compute->add_option("name", compute_opts.name, "catalog sequence name");
  compute->add_option("--n", compute_opts.n, "index to compute");
  compute->add_flag("--all", compute_opts.all, "print every index from the start");
  compute->add_flag("--list", compute_opts.list, "list catalog entries and exit");
  compute->add_option("--format", compute_opts.format, "text, json, csv, or md")
      ->check(CLI::IsMember({"text", "json", "csv", "md"}));
  compute->add_flag("--json", compute_opts.json_flag, "shorthand for --format json");
  compute->add_option("--out", out_path, "write output to this file");

  EnumerateOptions enumerate_opts;
  CLI::App* enumerate = app.add_subcommand("enumerate", "tally statistics over a family");
  enumerate->add_option("family", enumerate_opts.family,
                        "sym, signed, even_signed, or stirling");
  enumerate->add_option("--n", enumerate_opts.n, "element size");
  enumerate->add_option("--stats", enumerate_opts.stats, "statistics (comma separated)")
      ->delimiter(',');
  enumerate->add_option("--filter", enumerate_opts.filter, "restrict the family");
  enumerate->add_option("--q", enumerate_opts.q,
                        "weight value; poly in the first statistic, q^(second)");
  enumerate->add_option("--format", enumerate_opts.format, "text, json, csv, or md")
      ->check(CLI::IsMember({"text", "json", "csv", "md"}));
  enumerate->add_flag("--json", enumerate_opts.json_flag, "shorthand for --format json");
  enumerate->add_option("--out", out_path, "write output to this file");

  DeriveOptions derive_opts;
  CLI::App* derive = app.add_subcommand("derive", "derive the coupled system of a .eurec file");
  derive->add_option("file", derive_opts.path, "recurrence file")->required();
  derive->add_option("--n", derive_opts.n, "also iterate both sides and check the duality");
  derive->add_flag("--json", derive_opts.json_flag, "JSON output");
  derive->add_option("--out", out_path, "write output to this file");

  VerifyOptions verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("name", verify_opts.name, "identity name or 'all'");
  verify->add_option("--n-max", verify_opts.n_max, "override the default budget");
  verify->add_flag("--list", verify_opts.list, "list identity checks and exit");
  verify->add_flag("--json", verify_opts.json_flag, "JSON output");
  verify->add_option("--out", out_path, "write output to this file");

  AnalyzeOptions analyze_opts;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze one polynomial of a sequence");
  analyze->add_option("target", analyze_opts.target, "catalog name or .eurec file")->required();
  analyze->add_option("--n", analyze_opts.n, "index to analyze");
  analyze->add_option("--checks", analyze_opts.checks, "checks (comma separated)")
      ->delimiter(',');
  analyze->add_option("--window", analyze_opts.window,
                      "symmetry/expansion window (default: the degree)");
  analyze->add_option("--nu", analyze_opts.nu, "semi-gamma (1+x) prefactor exponent, 0 or 1");
  analyze->add_flag("--json", analyze_opts.json_flag, "JSON output");
  analyze->add_option("--out", out_path, "write output to this file");

  SeriesOptions series_opts;
  CLI::App* series = app.add_subcommand("series", "check generating-function identities");
  series->add_option("name", series_opts.name, "series identity name or 'all'");
  series->add_option("--order", series_opts.order, "truncation order (default 8)");
  series->add_flag("--list", series_opts.list, "list series identities and exit");
  series->add_flag("--json", series_opts.json_flag, "JSON output");
  series->add_option("--out", out_path, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitUsage;
  try {
    if (*compute)
      code = run_compute(compute_opts, buffer);
    else if (*enumerate)
      code = run_enumerate(enumerate_opts, buffer);
    else if (*derive)
      code = run_derive(derive_opts, buffer);
    else if (*verify)
      code = run_verify(verify_opts, buffer);
    else if (*analyze)
      code = run_analyze(analyze_opts, buffer);
    else if (*series)
      code = run_series(series_opts, buffer);
  } catch (const std::exception& e) {
    std::cerr << "eupair: " << e.what() << "\n";
    return kExitUsage;
  }

  if (out_path.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(out_path);
    if (!file) return usage_error("cannot write '" + out_path + "'");
    file << buffer.str();
  }
  return code;
}
