#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "eupair/catalog.hpp"
#include "eupair/dsl.hpp"

using namespace eupair;

#ifndef EUPAIR_CORPUS_DIR
#error "EUPAIR_CORPUS_DIR must point at the corpus directory"
#endif

namespace {

const std::string kCorpus = EUPAIR_CORPUS_DIR;

ParseResult parse_corpus(const std::string& stem) {
  return parse_file(kCorpus + "/" + stem + ".eurec");
}

}  // namespace

TEST_SUITE("dsl") {

TEST_CASE("corpus files reproduce the catalog") {
  for (const char* name : {"A", "B", "C", "L", "T", "R", "W", "Wbar", "H", "Htilde", "b"}) {
    ParseResult res = parse_corpus(name);
    INFO(name);
    REQUIRE(res.ok());
    CHECK(res.diagnostics.empty());
    const CatalogEntry* entry = catalog_find(name);
    REQUIRE(entry != nullptr);
    REQUIRE(entry->single.has_value());
    CHECK(*res.spec == *entry->single);
  }
}

TEST_CASE("malformed files carry positioned diagnostics") {
  struct Expected {
    const char* stem;
    int line, column;
    const char* message;
  };
  const Expected table[] = {
      {"bad/unknown_symbol", 2, 11, "unknown symbol 'y'"},
      {"bad/quadratic", 2, 11, "coefficient of x^1 is not affine in n"},
      {"bad/init_n", 4, 10, "initial polynomial must not involve n"},
      {"bad/missing_semicolon", 3, 3, "expected ';', found 'beta'"},
      {"bad/huge_exponent", 2, 13, "exponent exceeds the limit of 512"},
      {"bad/field_order", 2, 3, "expected 'alpha', found 'beta'"},
      {"bad/trailing", 6, 1, "unexpected trailing input after '}'"},
      {"bad/stray_char", 2, 13, "unexpected character '%'"},
  };
  for (const Expected& e : table) {
    ParseResult res = parse_corpus(e.stem);
    INFO(e.stem);
    CHECK(!res.ok());
    REQUIRE(!res.diagnostics.empty());
    const Diagnostic& d = res.diagnostics.front();
    CHECK(d.line == e.line);
    CHECK(d.column == e.column);
    CHECK(d.severity == Severity::error);
    CHECK(d.message.find(e.message) != std::string::npos);
  }
}

TEST_CASE("missing file") {
  ParseResult res = parse_file("no_such_file.eurec");
  CHECK(!res.ok());
  REQUIRE(res.diagnostics.size() == 1);
  const Diagnostic& d = res.diagnostics.front();
  CHECK(d.line == 1);
  CHECK(d.column == 1);
  CHECK(d.message == "cannot open file");
  CHECK(to_string(d, res.source_name) == "no_such_file.eurec:1:1: error: cannot open file");
}

TEST_CASE("canonical formatting") {
  const CatalogEntry* a = catalog_find("A");
  CHECK(format_spec(*a->single) ==
        "recurrence A { alpha = 1 + n*x; beta = x - x^2; init = 1 @ 0; }");
  // formatting then parsing is the identity on every cataloged single
  for (const CatalogEntry& entry : catalog()) {
    if (!entry.single.has_value()) continue;
    ParseResult res = parse_spec(format_spec(*entry.single));
    INFO(entry.name);
    REQUIRE(res.ok());
    CHECK(*res.spec == *entry.single);
  }
}

TEST_CASE("grammar corners") {
  ParseResult res = parse_spec(
      "# leading comment\n"
      "recurrence X {\n"
      "  alpha = (1 + x)^2 - x^2;  # trailing comment\n"
      "  beta = x^2^3;\n"
      "  init = -1 + (- -2) @ -1;\n"
      "}\n");
  REQUIRE(res.ok());
  CHECK(res.spec->name == "X");
  // (1+x)^2 - x^2 = 1 + 2x
  CHECK(res.spec->alpha.instantiate(7) == IntPoly{1, 2});
  // repeated exponents stack multiplicatively
  CHECK(res.spec->beta.instantiate(0) == IntPoly::monomial(1, 6));
  // the sign prefix chain cancels: -1 + 2
  CHECK(res.spec->initial == IntPoly{1});
  CHECK(res.spec->start_index == -1);

  res = parse_spec("recurrence Z { alpha = x*(2*n - 2); beta = 0; init = 0 @ 3; }");
  REQUIRE(res.ok());
  CHECK(res.spec->beta.is_zero());
  CHECK(res.spec->initial.is_zero());
  CHECK(res.spec->alpha.instantiate(1).is_zero());
  CHECK(res.spec->alpha.instantiate(3) == IntPoly{0, 4});
  // alpha has an n^2 cross term: rejected as not affine
  CHECK(!parse_spec("recurrence Q { alpha = n*x*n; beta = 0; init = 1 @ 0; }").ok());
}

TEST_CASE("inline diagnostics point into the text") {
  ParseResult res = parse_spec("recurrence P {\n  alpha = 1 +;\n  beta = x; init = 1 @ 0; }");
  CHECK(!res.ok());
  REQUIRE(!res.diagnostics.empty());
  CHECK(res.diagnostics.front().line == 2);
  CHECK(to_string(Severity::error) == "error");
  CHECK(to_string(Severity::warning) == "warning");
}

TEST_CASE("random round trips") {
  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(0, 4);
  std::uniform_int_distribution<int> init_deg(0, 3);
  std::uniform_int_distribution<int> start(-3, 3);

  auto random_family = [&] {
    std::vector<AffineCoeff> terms(static_cast<std::size_t>(deg(rng)) + 1);
    for (AffineCoeff& t : terms) t = {coeff(rng), coeff(rng)};
    return CoeffFamily(std::move(terms));
  };
  auto random_poly = [&] {
    std::vector<Int> coeffs(static_cast<std::size_t>(init_deg(rng)) + 1);
    for (Int& c : coeffs) c = coeff(rng);
    return IntPoly(std::move(coeffs));
  };

  for (int trial = 0; trial < 1000; ++trial) {
    RecurrenceSpec spec{"R" + std::to_string(trial), random_family(), random_family(),
                        random_poly(), start(rng)};
    ParseResult res = parse_spec(format_spec(spec));
    INFO(format_spec(spec));
    REQUIRE(res.ok());
    CHECK(*res.spec == spec);
  }
}

}  // TEST_SUITE
