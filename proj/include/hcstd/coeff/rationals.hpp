#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "hcstd/errors.hpp"

namespace hcstd {

/// The field Q. Elements are canonical GMP rationals.
///
/// The standard basis engine keeps polynomials integral and content-free while it
/// runs (see cancel_factors / make_primitive); only the final reduced basis is monic.
class Rationals {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const noexcept { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element from_int(std::int64_t v) const { return Element(mpz_class(static_cast<long>(v))); }
  Element from_mpz(const mpz_class& v) const { return Element(v); }
  Element from_mpq(const mpq_class& v) const { return v; }

  // Integer operands skip the gcd work of general rational arithmetic.
  Element add(const Element& a, const Element& b) const {
    if (!integral(a, b)) return a + b;
    Element r;
    mpz_add(mpq_numref(r.get_mpq_t()), mpq_numref(a.get_mpq_t()), mpq_numref(b.get_mpq_t()));
    return r;
  }
  Element sub(const Element& a, const Element& b) const {
    if (!integral(a, b)) return a - b;
    Element r;
    mpz_sub(mpq_numref(r.get_mpq_t()), mpq_numref(a.get_mpq_t()), mpq_numref(b.get_mpq_t()));
    return r;
  }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const {
    if (!integral(a, b)) return a * b;
    Element r;
    mpz_mul(mpq_numref(r.get_mpq_t()), mpq_numref(a.get_mpq_t()), mpq_numref(b.get_mpq_t()));
    return r;
  }
  static bool integral(const Element& a, const Element& b) {
    return mpz_cmp_ui(mpq_denref(a.get_mpq_t()), 1) == 0 && mpz_cmp_ui(mpq_denref(b.get_mpq_t()), 1) == 0;
  }

  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw DivisionByZero();
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const {
    if (sgn(b) == 0) throw DivisionByZero();
    return a / b;
  }

  /// (u, v) with u*a == v*b. Integral inputs give integral, cofactor-reduced outputs.
  std::pair<Element, Element> cancel_factors(const Element& a, const Element& b) const {
    if (a.get_den() == 1 && b.get_den() == 1) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
      mpz_class u = b.get_num() / g;
      mpz_class v = a.get_num() / g;
      if (sgn(u) < 0) {
        u = -u;
        v = -v;
      }
      return {Element(u), Element(v)};
    }
    return {one(), a / b};
  }

  /// Scales to integer coefficients with content 1 and a positive first coefficient.
  void make_primitive(std::span<Element> coeffs) const {
    if (coeffs.empty()) return;
    mpz_class den_lcm = 1;
    for (const auto& c : coeffs) {
      if (c.get_den() != 1) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    mpz_class content = 0;
    for (const auto& c : coeffs) {
      mpz_class num = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
      if (content == 1) break;
    }
    if (sgn(coeffs.front()) < 0) content = -content;
    if (den_lcm == 1 && content == 1) return;
    for (auto& c : coeffs) {
      mpz_class num = c.get_num() * (den_lcm / c.get_den());
      mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), content.get_mpz_t());
      c = Element(num);
    }
  }

  std::string to_string(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }
  bool needs_parentheses(const Element&) const noexcept { return false; }

  bool operator==(const Rationals&) const noexcept { return true; }
};

}  // namespace hcstd
