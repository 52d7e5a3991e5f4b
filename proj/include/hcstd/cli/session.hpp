#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hcstd/coeff/domain.hpp"
#include "hcstd/errors.hpp"
#include "hcstd/ring/ideal.hpp"
#include "hcstd/ring/monomial.hpp"
#include "hcstd/ring/parse.hpp"

namespace hcstd::cli {

/// Named polynomials and ideals over one concrete coefficient field.
template <class Field>
struct Definitions {
  using Ring = PolyRing<Field>;
  using Poly = typename Ring::Poly;

  std::shared_ptr<const Ring> ring;
  std::map<std::string, Poly> polys;
  std::map<std::string, IdealPresentation<Field>> ideals;
  std::optional<std::string> last_poly;
  std::optional<std::string> last_ideal;
};

using AnyDefinitions =
    std::variant<Definitions<Rationals>, Definitions<PrimeField>, Definitions<RationalFunctionField>>;

struct Session {
  std::string ring_name;
  DomainSpec domain;
  OrderSpec order;
  AnyDefinitions defs;
};

namespace detail {

inline std::uint32_t parse_characteristic(TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.kind != Token::Kind::Number) ts.fail("expected a characteristic");
  if (t.text.size() > 10 || std::stoull(t.text) >= (1ull << 31)) {
    throw ParseError("characteristic must be 0 or a prime below 2^31", t.line, t.column);
  }
  auto c = static_cast<std::uint32_t>(std::stoul(t.text));
  if (c != 0 && !is_prime_u32(c)) throw ParseError("characteristic must be 0 or a prime", t.line, t.column);
  ts.next();
  return c;
}

inline std::vector<std::string> parse_name_list(TokenStream& ts) {
  std::vector<std::string> names;
  ts.expect('(');
  do {
    names.push_back(ts.expect_ident());
  } while (ts.accept(','));
  ts.expect(')');
  return names;
}

inline OrderSpec parse_order(TokenStream& ts, const std::vector<std::string>& vars) {
  const Token at = ts.peek();
  const std::string name = ts.expect_ident();
  std::vector<unsigned> weights;
  OrderKind kind;
  if (name == "ds") {
    kind = OrderKind::ds;
  } else if (name == "Ds") {
    kind = OrderKind::Ds;
  } else if (name == "ws") {
    kind = OrderKind::ws;
    ts.expect('(');
    do {
      const Token& w = ts.peek();
      if (w.kind != Token::Kind::Number || w.text.size() > 6) ts.fail("expected a positive weight");
      weights.push_back(static_cast<unsigned>(std::stoul(w.text)));
      ts.next();
    } while (ts.accept(','));
    ts.expect(')');
  } else {
    throw ParseError("unsupported ordering '" + name + "' (local orderings: ds, Ds, ws(w1,...,wn))", at.line,
                     at.column);
  }
  try {
    return OrderSpec(kind, vars, weights);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), at.line, at.column);
  }
}

template <class Field>
class StatementParser {
 public:
  using Defs = Definitions<Field>;
  using Poly = typename Defs::Poly;

  StatementParser(Defs& defs, std::vector<std::string> params, std::set<std::string> reserved)
      : defs_(defs),
        expr_(*defs.ring, std::move(params), [this](const std::string& n) { return lookup(n); }),
        reserved_(std::move(reserved)) {}

  void parse(TokenStream& ts) {
    while (!ts.at_end()) {
      const Token kw = ts.peek();
      if (kw.kind != Token::Kind::Ident) ts.fail("expected 'poly' or 'ideal'");
      if (kw.text == "poly") {
        ts.next();
        std::string name = declare(ts);
        ts.expect('=');
        Poly p = expr_.parse_expression(ts);
        ts.expect(';');
        defs_.polys.emplace(name, std::move(p));
        defs_.last_poly = name;
      } else if (kw.text == "ideal") {
        ts.next();
        std::string name = declare(ts);
        ts.expect('=');
        std::vector<Poly> gens;
        do {
          parse_ideal_item(ts, gens);
        } while (ts.accept(','));
        ts.expect(';');
        defs_.ideals.emplace(name, IdealPresentation<Field>(defs_.ring, std::move(gens)));
        defs_.last_ideal = name;
      } else if (kw.text == "ring") {
        throw ParseError("only one ring per session", kw.line, kw.column);
      } else {
        throw ParseError("unknown statement '" + kw.text + "'", kw.line, kw.column);
      }
    }
  }

 private:
  std::string declare(TokenStream& ts) {
    const Token at = ts.peek();
    std::string name = ts.expect_ident();
    if (reserved_.count(name) || defs_.polys.count(name) || defs_.ideals.count(name)) {
      throw ParseError("name '" + name + "' is already defined", at.line, at.column);
    }
    return name;
  }

  void parse_ideal_item(TokenStream& ts, std::vector<Poly>& gens) {
    const Token t = ts.peek();
    if (t.kind == Token::Kind::Ident && t.text == "jacob" && ts.peek(1).is('(')) {
      ts.next();
      ts.next();
      Poly f = expr_.parse_expression(ts);
      ts.expect(')');
      for (std::size_t i = 0; i < defs_.ring->nvars(); ++i) gens.push_back(defs_.ring->derivative(f, i));
      return;
    }
    if (t.kind == Token::Kind::Ident && defs_.ideals.count(t.text)) {
      const Token& after = ts.peek(1);
      if (after.is(',') || after.is(';')) {
        ts.next();
        const auto& other = defs_.ideals.at(t.text).generators;
        gens.insert(gens.end(), other.begin(), other.end());
        return;
      }
    }
    gens.push_back(expr_.parse_expression(ts));
  }

  const Poly* lookup(const std::string& name) const {
    auto it = defs_.polys.find(name);
    return it == defs_.polys.end() ? nullptr : &it->second;
  }

  Defs& defs_;
  ExpressionParser<Field> expr_;
  std::set<std::string> reserved_;
};

}  // namespace detail

/// Parses `ring R = <char>|(<char>,params),(vars),<ordering>;` followed by
/// `poly NAME = expr;` and `ideal NAME = item, ...;` statements. Ideal items are
/// expressions, `jacob(expr)` (all partial derivatives) or earlier ideal names.
inline Session parse_session(std::string_view text) {
  TokenStream ts(tokenize(text));
  const Token kw = ts.peek();
  if (!(kw.kind == Token::Kind::Ident && kw.text == "ring")) ts.fail("expected 'ring'");
  ts.next();
  Session s;
  s.ring_name = ts.expect_ident();
  ts.expect('=');
  const Token dom_at = ts.peek();
  if (ts.accept('(')) {
    s.domain.characteristic = detail::parse_characteristic(ts);
    while (ts.accept(',')) s.domain.parameters.push_back(ts.expect_ident());
    ts.expect(')');
  } else {
    s.domain.characteristic = detail::parse_characteristic(ts);
  }
  ts.expect(',');
  std::vector<std::string> vars = detail::parse_name_list(ts);
  ts.expect(',');
  s.order = detail::parse_order(ts, vars);
  ts.expect(';');
  try {
    s.domain.validate(vars);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), dom_at.line, dom_at.column);
  }

  std::set<std::string> reserved(vars.begin(), vars.end());
  reserved.insert(s.domain.parameters.begin(), s.domain.parameters.end());
  reserved.insert(s.ring_name);
  reserved.insert("jacob");

  auto parse_rest = [&](auto field) {
    using Field = decltype(field);
    Definitions<Field> defs;
    defs.ring = std::make_shared<const PolyRing<Field>>(std::move(field), s.order);
    std::vector<std::string> params;
    if constexpr (std::is_same_v<Field, RationalFunctionField>) params = s.domain.parameters;
    detail::StatementParser<Field> parser(defs, params, reserved);
    parser.parse(ts);
    s.defs = std::move(defs);
  };
  if (s.domain.has_parameters()) {
    parse_rest(RationalFunctionField(s.domain.characteristic, s.domain.parameters));
  } else if (s.domain.characteristic != 0) {
    parse_rest(PrimeField(s.domain.characteristic));
  } else {
    parse_rest(Rationals{});
  }
  return s;
}

}  // namespace hcstd::cli
