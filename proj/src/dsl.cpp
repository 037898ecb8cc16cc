#include "eupair/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <utility>

#include "eupair/coeff_family.hpp"
#include "eupair/int_poly.hpp"
#include "eupair/numeric.hpp"

namespace eupair {
namespace {

constexpr unsigned kMaxExponent = 512;

struct Token {
  enum Kind {
    ident,
    integer,
    plus,
    minus,
    star,
    caret,
    lparen,
    rparen,
    lbrace,
    rbrace,
    equals,
    semicolon,
    at,
    eof
  };
  Kind kind = eof;
  std::string text;
  int line = 1, column = 1;
};

struct ParseError {
  Diagnostic diag;
};

[[noreturn]] void fail_at(int line, int column, std::string message) {
  throw ParseError{Diagnostic{line, column, Severity::error, std::move(message)}};
}

[[noreturn]] void fail_at(const Token& t, std::string message) {
  fail_at(t.line, t.column, std::move(message));
}

std::string describe(const Token& t) {
  if (t.kind == Token::eof) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (; k > 0; --k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Token::integer;
      t.text = text.substr(i, j - i);
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      t.kind = Token::ident;
      t.text = text.substr(i, j - i);
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    switch (ch) {
      case '+': t.kind = Token::plus; break;
      case '-': t.kind = Token::minus; break;
      case '*': t.kind = Token::star; break;
      case '^': t.kind = Token::caret; break;
      case '(': t.kind = Token::lparen; break;
      case ')': t.kind = Token::rparen; break;
      case '{': t.kind = Token::lbrace; break;
      case '}': t.kind = Token::rbrace; break;
      case '=': t.kind = Token::equals; break;
      case ';': t.kind = Token::semicolon; break;
      case '@': t.kind = Token::at; break;
      default: fail_at(line, column, std::string("unexpected character '") + ch + "'");
    }
    t.text.assign(1, ch);
    advance(1);
    out.push_back(std::move(t));
  }
  out.push_back(Token{Token::eof, "", line, column});
  return out;
}

// Expression value: polynomial in x whose coefficients are dense
// polynomials in n (c[i][j] = coefficient of n^j x^i).
struct NX {
  std::vector<std::vector<Int>> c;

  void normalize() {
    for (std::vector<Int>& inner : c)
      while (!inner.empty() && inner.back() == 0) inner.pop_back();
    while (!c.empty() && c.back().empty()) c.pop_back();
  }
};

NX nx_const(Int v) {
  NX r;
  r.c = {{std::move(v)}};
  r.normalize();
  return r;
}

NX nx_n() {
  NX r;
  r.c = {{Int(0), Int(1)}};
  return r;
}

NX nx_x() {
  NX r;
  r.c = {{}, {Int(1)}};
  return r;
}

NX nx_add(NX a, const NX& b) {
  if (a.c.size() < b.c.size()) a.c.resize(b.c.size());
  for (std::size_t i = 0; i < b.c.size(); ++i) {
    if (a.c[i].size() < b.c[i].size()) a.c[i].resize(b.c[i].size(), Int(0));
    for (std::size_t j = 0; j < b.c[i].size(); ++j) a.c[i][j] += b.c[i][j];
  }
  a.normalize();
  return a;
}

NX nx_neg(NX a) {
  for (std::vector<Int>& inner : a.c)
    for (Int& v : inner) v = -v;
  return a;
}

NX nx_mul(const NX& a, const NX& b) {
  NX r;
  if (a.c.empty() || b.c.empty()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, {});
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].empty()) continue;
    for (std::size_t k = 0; k < b.c.size(); ++k) {
      if (b.c[k].empty()) continue;
      std::vector<Int>& dst = r.c[i + k];
      if (dst.size() < a.c[i].size() + b.c[k].size() - 1)
        dst.resize(a.c[i].size() + b.c[k].size() - 1, Int(0));
      for (std::size_t j = 0; j < a.c[i].size(); ++j)
        for (std::size_t l = 0; l < b.c[k].size(); ++l) dst[j + l] += a.c[i][j] * b.c[k][l];
    }
  }
  r.normalize();
  return r;
}

NX nx_pow(NX base, unsigned k) {
  NX acc = nx_const(Int(1));
  while (k > 0) {
    if (k & 1u) acc = nx_mul(acc, base);
    k >>= 1u;
    if (k > 0) base = nx_mul(base, base);
  }
  return acc;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  RecurrenceSpec parse() {
    expect_keyword("recurrence");
    RecurrenceSpec spec;
    spec.name = expect(Token::ident, "recurrence name").text;
    expect(Token::lbrace, "'{'");
    spec.alpha = parse_family_field("alpha");
    spec.beta = parse_family_field("beta");
    expect_keyword("init");
    expect(Token::equals, "'='");
    first_n_.reset();
    NX value = parse_expr();
    spec.initial = to_poly(value);
    expect(Token::at, "'@'");
    spec.start_index = parse_start_index();
    expect(Token::semicolon, "';'");
    expect(Token::rbrace, "'}'");
    if (peek().kind != Token::eof) fail_at(peek(), "unexpected trailing input after '}'");
    return spec;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& get() { return tokens_[pos_++]; }

  const Token& expect(Token::Kind kind, const std::string& what) {
    if (peek().kind != kind) fail_at(peek(), "expected " + what + ", found " + describe(peek()));
    return get();
  }

  void expect_keyword(const std::string& word) {
    if (peek().kind != Token::ident || peek().text != word)
      fail_at(peek(), "expected '" + word + "', found " + describe(peek()));
    get();
  }

  CoeffFamily parse_family_field(const std::string& field) {
    expect_keyword(field);
    expect(Token::equals, "'='");
    first_n_.reset();
    NX value = parse_expr();
    CoeffFamily family = to_family(value);
    expect(Token::semicolon, "';'");
    return family;
  }

  NX parse_expr() {
    bool negate = false;
    while (peek().kind == Token::plus || peek().kind == Token::minus)
      if (get().kind == Token::minus) negate = !negate;
    NX acc = parse_term();
    if (negate) acc = nx_neg(std::move(acc));
    while (peek().kind == Token::plus || peek().kind == Token::minus) {
      bool minus = get().kind == Token::minus;
      NX rhs = parse_term();
      acc = nx_add(std::move(acc), minus ? nx_neg(std::move(rhs)) : rhs);
    }
    return acc;
  }

  NX parse_term() {
    NX acc = parse_factor();
    while (peek().kind == Token::star) {
      get();
      acc = nx_mul(acc, parse_factor());
    }
    return acc;
  }

  NX parse_factor() {
    NX value = parse_primary();
    while (peek().kind == Token::caret) {
      get();
      const Token& e = expect(Token::integer, "exponent");
      if (e.text.size() > 3 || std::stoul(e.text) > kMaxExponent)
        fail_at(e, "exponent exceeds the limit of " + std::to_string(kMaxExponent));
      value = nx_pow(std::move(value), static_cast<unsigned>(std::stoul(e.text)));
    }
    return value;
  }

  NX parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::integer: return nx_const(Int(get().text));
      case Token::ident:
        if (t.text == "n") {
          if (!first_n_) first_n_ = t;
          get();
          return nx_n();
        }
        if (t.text == "x") {
          get();
          return nx_x();
        }
        fail_at(t, "unknown symbol '" + t.text + "' (expected n, x, an integer, or '(')");
      case Token::lparen: {
        get();
        NX inner = parse_expr();
        expect(Token::rparen, "')'");
        return inner;
      }
      default: fail_at(t, "expected a value, found " + describe(t));
    }
  }

  int parse_start_index() {
    bool negate = peek().kind == Token::minus;
    if (negate) get();
    const Token& t = expect(Token::integer, "start index");
    if (t.text.size() > 6) fail_at(t, "start index out of range");
    int v = std::stoi(t.text);
    return negate ? -v : v;
  }

  CoeffFamily to_family(const NX& value) {
    std::vector<AffineCoeff> terms;
    for (std::size_t i = 0; i < value.c.size(); ++i) {
      const std::vector<Int>& inner = value.c[i];
      if (inner.size() > 2)
        fail_at(*first_n_, "coefficient of x^" + std::to_string(i) + " is not affine in n");
      terms.push_back(AffineCoeff{inner.empty() ? Int(0) : inner[0],
                                  inner.size() > 1 ? inner[1] : Int(0)});
    }
    return CoeffFamily(std::move(terms));
  }

  IntPoly to_poly(const NX& value) {
    std::vector<Int> coeffs;
    for (const std::vector<Int>& inner : value.c) {
      if (inner.size() > 1) fail_at(*first_n_, "initial polynomial must not involve n");
      coeffs.push_back(inner.empty() ? Int(0) : inner[0]);
    }
    return IntPoly(std::move(coeffs));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::optional<Token> first_n_;
};

}  // namespace

ParseResult parse_spec(const std::string& text, const std::string& source_name) {
  ParseResult result;
  result.source_name = source_name;
  try {
    Parser parser(lex(text));
    result.spec = parser.parse();
  } catch (const ParseError& err) {
    result.diagnostics.push_back(err.diag);
  }
  return result;
}

ParseResult parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ParseResult result;
    result.source_name = path;
    result.diagnostics.push_back(Diagnostic{1, 1, Severity::error, "cannot open file"});
    return result;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str(), path);
}

std::string format_spec(const RecurrenceSpec& spec) {
  return "recurrence " + spec.name + " { alpha = " + to_string(spec.alpha) +
         "; beta = " + to_string(spec.beta) +
         "; init = " + to_string(CoeffFamily::from_poly(spec.initial)) + " @ " +
         std::to_string(spec.start_index) + "; }";
}

std::string to_string(Severity s) { return s == Severity::error ? "error" : "warning"; }

std::string to_string(const Diagnostic& d, const std::string& source_name) {
  return source_name + ":" + std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
         to_string(d.severity) + ": " + d.message;
}

}  // namespace eupair
