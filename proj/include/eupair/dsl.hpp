#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eupair/recurrence.hpp"

namespace eupair {

enum class Severity { error, warning };

struct Diagnostic {
  int line = 1, column = 1;
  Severity severity = Severity::error;
  std::string message;
};

struct ParseResult {
  std::string source_name;
  std::optional<RecurrenceSpec> spec;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return spec.has_value(); }
};

// Textual form of a single recurrence:
//
//   recurrence NAME { alpha = EXPR; beta = EXPR; init = EXPR @ INT; }
//
//   expr   := ["+"|"-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := (INT | "n" | "x" | "(" expr ")") ("^" INT)*
//
// "#" starts a line comment. Expressions are expanded exactly; every
// coefficient of alpha and beta must be affine in n, and the init
// polynomial must not involve n at all. Violations yield positioned
// diagnostics instead of a spec.
ParseResult parse_spec(const std::string& text, const std::string& source_name = "<input>");
ParseResult parse_file(const std::string& path);

// Canonical one-line form, ascending powers of x; parsing it reproduces
// the spec exactly.
std::string format_spec(const RecurrenceSpec& spec);

std::string to_string(Severity s);
// "name:line:col: severity: message"
std::string to_string(const Diagnostic& d, const std::string& source_name);

}  // namespace eupair
