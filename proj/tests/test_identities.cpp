#include "doctest.h"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eupair/identities.hpp"

using namespace eupair;

namespace {

// Small budgets keep the unit suite quick; the acceptance gate runs the
// full defaults.
const std::map<std::string, int>& reduced_budgets() {
  static const std::map<std::string, int> budgets = {
      {"DBA", 4},        {"FDES-PROD", 4},    {"HB-C", 4},         {"P-EQ", 4},
      {"B-HYATT", 4},    {"FDES-FEXC", 4},    {"D-FEXC", 4},       {"D-CPLUS", 4},
      {"Q-FLAG", 3},     {"L-ENUM", 5},       {"L-SPLIT", 5},      {"MN-REL", 5},
      {"MN-CONV", 6},    {"MN-AI", 10},       {"T-ENUM", 5},       {"T-SPLIT", 5},
      {"T-R", 8},        {"W-ENUM", 5},       {"UV-ENUM", 4},      {"B-EVAL", 10},
      {"GAMMA-L", 8},    {"DUALITY", 8},      {"THM-ROOTS-C", 8},  {"THM-ROOTS-T", 8},
      {"HB-EQUIV", 6},   {"ALTRUN-CONV", 4},  {"PHI", 4},
  };
  return budgets;
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("registry") {
  const std::vector<IdentityInfo>& checks = identity_checks();
  REQUIRE(checks.size() == 27);
  const char* expected[] = {
      "DBA",     "FDES-PROD", "HB-C",    "P-EQ",        "B-HYATT",     "FDES-FEXC",
      "D-FEXC",  "D-CPLUS",   "Q-FLAG",  "L-ENUM",      "L-SPLIT",     "MN-REL",
      "MN-CONV", "MN-AI",     "T-ENUM",  "T-SPLIT",     "T-R",         "W-ENUM",
      "UV-ENUM", "B-EVAL",    "GAMMA-L", "DUALITY",     "THM-ROOTS-C", "THM-ROOTS-T",
      "HB-EQUIV", "ALTRUN-CONV", "PHI",
  };
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CHECK(checks[i].name == expected[i]);
    CHECK(checks[i].default_n_max > 0);
    CHECK(!checks[i].summary.empty());
    CHECK(is_identity(checks[i].name));
  }
  CHECK(!is_identity("nope"));
  CHECK_THROWS_AS(verify("nope", 3), std::invalid_argument);
}

TEST_CASE("report lines") {
  IdentityReport rep = verify("DBA", 4);
  CHECK(rep.pass);
  CHECK(rep.n_max == 4);
  CHECK(!rep.witness.has_value());
  CHECK(report_line(rep) == "DBA n≤4 PASS");
}

TEST_CASE("every check passes at a reduced budget") {
  std::vector<IdentityReport> reports = verify_all(reduced_budgets());
  REQUIRE(reports.size() == identity_checks().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    INFO(reports[i].name);
    CHECK(reports[i].name == identity_checks()[i].name);
    CHECK(reports[i].n_max == reduced_budgets().at(reports[i].name));
    CHECK(reports[i].pass);
  }
}

TEST_CASE("parallel fan-out preserves report order") {
  setenv("EUPAIR_JOBS", "3", 1);
  std::vector<IdentityReport> reports = verify_all(reduced_budgets());
  unsetenv("EUPAIR_JOBS");
  REQUIRE(reports.size() == identity_checks().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    INFO(reports[i].name);
    CHECK(reports[i].name == identity_checks()[i].name);
    CHECK(reports[i].pass);
  }
}

}  // TEST_SUITE
