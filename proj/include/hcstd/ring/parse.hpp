#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "hcstd/coeff/rational_function.hpp"
#include "hcstd/errors.hpp"
#include "hcstd/ring/polynomial.hpp"

namespace hcstd {

struct Token {
  enum class Kind { Ident, Number, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is(char c) const { return kind == Kind::Symbol && text.size() == 1 && text[0] == c; }
};

/// Splits text into identifiers, unsigned integers and single-character symbols.
/// Skips whitespace and // comments.
inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t j = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      t.kind = Token::Kind::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Token::Kind::Number;
    } else if (std::string_view("+-*/^(),;=").find(c) != std::string_view::npos) {
      j = i + 1;
      t.kind = Token::Kind::Symbol;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    t.text = std::string(text.substr(i, j - i));
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

/// Cursor over a token vector shared by the expression and session parsers.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool accept(char c) {
    if (peek().is(c)) {
      next();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string expect_ident() {
    if (peek().kind != Token::Kind::Ident) fail("expected identifier");
    return next().text;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", found " + found, t.line, t.column);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Recursive-descent parser for polynomial expressions over a ring.
///
/// Grammar: sums and differences of products; '*' is optional between factors;
/// '^' takes a nonnegative integer; '/' divides by a nonzero constant; parameters
/// are coefficients. When every variable and parameter name is a single letter,
/// identifiers such as x3y3 read as x^3*y^3.
template <class Field>
class ExpressionParser {
 public:
  using Ring = PolyRing<Field>;
  using Poly = typename Ring::Poly;
  using Lookup = std::function<const Poly*(const std::string&)>;

  ExpressionParser(const Ring& ring, std::vector<std::string> parameters, Lookup named = {})
      : ring_(ring), params_(std::move(parameters)), named_(std::move(named)) {
    short_names_ = true;
    for (const auto& v : ring_.order().variables()) short_names_ = short_names_ && v.size() == 1;
    for (const auto& p : params_) short_names_ = short_names_ && p.size() == 1;
  }

  Poly parse_expression(TokenStream& ts) const {
    Poly acc;
    bool first = true;
    while (true) {
      bool negate = false;
      if (ts.peek().is('+') || ts.peek().is('-')) {
        negate = ts.next().is('-');
      } else if (!first) {
        break;
      }
      Poly term = parse_product(ts);
      acc = negate ? ring_.sub(acc, term) : ring_.add(acc, term);
      first = false;
    }
    return acc;
  }

 private:
  static bool starts_factor(const Token& t) {
    return t.kind == Token::Kind::Ident || t.kind == Token::Kind::Number || t.is('(');
  }

  Poly parse_product(TokenStream& ts) const {
    Poly acc = parse_power(ts);
    while (true) {
      if (ts.peek().is('*')) {
        ts.next();
        acc = ring_.mul(acc, parse_power(ts));
      } else if (ts.peek().is('/')) {
        ts.next();
        const Token at = ts.peek();
        Poly d = parse_power(ts);
        if (d.is_zero()) throw ParseError("division by zero", at.line, at.column);
        if (d.size() != 1 || !d.lm().is_one()) {
          throw ParseError("division by a non-constant", at.line, at.column);
        }
        acc = ring_.scale(acc, ring_.field().inv(d.lc()));
      } else if (starts_factor(ts.peek())) {
        acc = ring_.mul(acc, parse_power(ts));
      } else {
        return acc;
      }
    }
  }

  Poly parse_power(TokenStream& ts) const {
    Poly base = parse_primary(ts);
    if (ts.accept('^')) {
      const Token& e = ts.peek();
      if (e.kind != Token::Kind::Number) ts.fail("expected exponent");
      unsigned exp = parse_exponent(e);
      ts.next();
      base = ring_.pow(base, exp);
    }
    return base;
  }

  unsigned parse_exponent(const Token& t) const {
    if (t.text.size() > 6 || std::stoul(t.text) > kMaxExponent) {
      throw ParseError("exponent too large", t.line, t.column);
    }
    return static_cast<unsigned>(std::stoul(t.text));
  }

  Poly parse_primary(TokenStream& ts) const {
    const Token t = ts.peek();
    if (t.is('-')) {
      ts.next();
      return ring_.neg(parse_power(ts));
    }
    if (t.is('(')) {
      ts.next();
      Poly p = parse_expression(ts);
      ts.expect(')');
      return p;
    }
    if (t.kind == Token::Kind::Number) {
      ts.next();
      return ring_.constant(ring_.field().from_mpz(mpz_class(t.text)));
    }
    if (t.kind == Token::Kind::Ident) {
      ts.next();
      return resolve(t);
    }
    ts.fail("expected a polynomial expression");
  }

  std::optional<Poly> resolve_name(const std::string& name) const {
    const auto& vars = ring_.order().variables();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == name) return ring_.variable(i);
    }
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (params_[i] == name) return parameter(i);
    }
    if (named_) {
      if (const Poly* p = named_(name)) return *p;
    }
    return std::nullopt;
  }

  Poly parameter(std::size_t i) const {
    if constexpr (std::is_same_v<Field, RationalFunctionField>) {
      return ring_.constant(ring_.field().parameter(i));
    } else {
      (void)i;
      throw InvalidArgument("parameters require a rational function field");
    }
  }

  Poly resolve(const Token& t) const {
    if (auto p = resolve_name(t.text)) return *p;
    if (!short_names_) throw ParseError("unknown identifier '" + t.text + "'", t.line, t.column);
    // implicit-power shorthand: letter digits letter digits ...
    Poly acc = ring_.constant(ring_.field().one());
    std::size_t i = 0;
    while (i < t.text.size()) {
      std::string name(1, t.text[i]);
      auto base = resolve_name(name);
      if (!base || !std::isalpha(static_cast<unsigned char>(t.text[i]))) {
        throw ParseError("unknown identifier '" + t.text + "'", t.line, t.column + i);
      }
      std::size_t j = i + 1;
      while (j < t.text.size() && std::isdigit(static_cast<unsigned char>(t.text[j]))) ++j;
      unsigned e = 1;
      if (j > i + 1) {
        Token et = t;
        et.text = t.text.substr(i + 1, j - i - 1);
        e = parse_exponent(et);
      }
      acc = ring_.mul(acc, ring_.pow(*base, e));
      i = j;
    }
    return acc;
  }

  const Ring& ring_;
  std::vector<std::string> params_;
  Lookup named_;
  bool short_names_ = false;
};

/// Parses one polynomial from text. Parameter names are only meaningful over a
/// rational function field and are taken from it.
template <class Field>
Polynomial<typename Field::Element> parse_polynomial(
    const PolyRing<Field>& ring, std::string_view text,
    typename ExpressionParser<Field>::Lookup named = {}) {
  std::vector<std::string> params;
  if constexpr (std::is_same_v<Field, RationalFunctionField>) params = ring.field().parameter_names();
  ExpressionParser<Field> parser(ring, params, std::move(named));
  TokenStream ts(tokenize(text));
  auto p = parser.parse_expression(ts);
  if (!ts.at_end()) ts.fail("unexpected trailing input");
  return p;
}

}  // namespace hcstd
