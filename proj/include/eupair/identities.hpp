#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eupair {

struct IdentityWitness {
  int n = 0;
  std::string lhs, rhs;
  std::string note;  // which equation inside the check failed
};

struct IdentityReport {
  std::string name;
  int n_max = 0;
  bool pass = false;
  std::optional<IdentityWitness> witness;
};

struct IdentityInfo {
  std::string name;
  int default_n_max = 0;
  std::string summary;
};

// Registered checks in deterministic execution/report order.
const std::vector<IdentityInfo>& identity_checks();
bool is_identity(const std::string& name);

// Runs one check up to n_max (or its default budget). Throws
// std::invalid_argument for unknown names.
IdentityReport verify(const std::string& name, int n_max);
IdentityReport verify(const std::string& name);

// Runs every check at its default budget, with per-name overrides. Honors
// the EUPAIR_JOBS environment variable for optional fan-out; the report
// order is the registry order regardless.
std::vector<IdentityReport> verify_all(const std::map<std::string, int>& budgets = {});

// "NAME n≤K PASS" / "NAME n≤K FAIL".
std::string report_line(const IdentityReport& report);

}  // namespace eupair
