#pragma once

#include <string>

#include "hcstd/ring/polynomial.hpp"

namespace hcstd {

inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

/// Prints with explicit '^' and '*', leading term first, e.g. "3*x^2*y-1/2*z^4".
template <class Field>
std::string format_polynomial(const PolyRing<Field>& ring, const Polynomial<typename Field::Element>& f) {
  if (f.is_zero()) return "0";
  const auto& field = ring.field();
  const auto& names = ring.order().variables();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    auto c = t.coeff;
    bool negative = field.is_negative(c);
    if (negative) c = field.neg(c);
    if (negative) out += '-';
    else if (!first) out += '+';
    first = false;
    const bool is_const = t.mono.is_one();
    if (field.is_one(c)) {
      out += is_const ? "1" : format_monomial(t.mono, names);
      continue;
    }
    std::string cs = field.to_string(c);
    if (field.needs_parentheses(c) && !(cs.front() == '(' && is_const)) cs = "(" + cs + ")";
    out += cs;
    if (!is_const) out += '*' + format_monomial(t.mono, names);
  }
  return out;
}

}  // namespace hcstd
