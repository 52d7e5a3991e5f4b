#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hcstd/coeff/param_poly.hpp"
#include "hcstd/errors.hpp"

namespace hcstd {

/// Element of k(t_1..t_s): num/den with gcd(num, den) = 1 (integer content included
/// in char 0) and a normalized denominator (positive leading coefficient, or monic).
struct RatFun {
  ParamPoly num;
  ParamPoly den;

  friend bool operator==(const RatFun&, const RatFun&) = default;
};

/// The rational function field Q(t) or F_p(t) in named parameters.
class RationalFunctionField {
 public:
  using Element = RatFun;

  RationalFunctionField(std::uint32_t characteristic, std::vector<std::string> names)
      : ring_(names.size(), characteristic), names_(std::move(names)) {}

  std::uint32_t characteristic() const noexcept { return ring_.characteristic(); }
  const std::vector<std::string>& parameter_names() const noexcept { return names_; }
  const ParamRing& param_ring() const noexcept { return ring_; }

  Element zero() const { return {ParamPoly{}, ring_.constant(1)}; }
  Element one() const { return {ring_.constant(1), ring_.constant(1)}; }
  bool is_zero(const Element& a) const { return a.num.is_zero(); }
  bool is_one(const Element& a) const { return a.num.is_one() && a.den.is_one(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element from_int(std::int64_t v) const { return from_mpz(mpz_class(static_cast<long>(v))); }
  Element from_mpz(const mpz_class& v) const { return {ring_.constant(v), ring_.constant(1)}; }
  Element from_mpq(const mpq_class& v) const {
    return make(ring_.constant(v.get_num()), ring_.constant(v.get_den()));
  }
  Element from_poly(ParamPoly p) const { return {std::move(p), ring_.constant(1)}; }
  Element parameter(std::size_t i) const { return from_poly(ring_.variable(i)); }

  /// Canonical form of num/den.
  Element make(ParamPoly num, ParamPoly den) const {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return zero();
    if (!den.is_one()) {
      ParamPoly g = ring_.gcd(num, den);
      if (!g.is_one()) {
        num = ring_.exact_div(num, g);
        den = ring_.exact_div(den, g);
      }
      if (characteristic() == 0) {
        if (sgn(den.leading_coeff()) < 0) {
          num = ring_.neg(std::move(num));
          den = ring_.neg(std::move(den));
        }
      } else if (den.leading_coeff() != 1) {
        mpz_class s = ring_.inverse(den.leading_coeff());
        num = ring_.scale(std::move(num), s);
        den = ring_.scale(std::move(den), s);
      }
    }
    return {std::move(num), std::move(den)};
  }

  Element add(const Element& a, const Element& b) const {
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    if (a.den.is_one() && b.den.is_one()) return from_poly(ring_.add(a.num, b.num));
    if (a.den == b.den) return make(ring_.add(a.num, b.num), a.den);
    return make(ring_.add(ring_.mul(a.num, b.den), ring_.mul(b.num, a.den)), ring_.mul(a.den, b.den));
  }

  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
  Element neg(Element a) const {
    a.num = ring_.neg(std::move(a.num));
    return a;
  }

  Element mul(const Element& a, const Element& b) const {
    if (is_zero(a) || is_zero(b)) return zero();
    if (a.den.is_one() && b.den.is_one()) return from_poly(ring_.mul(a.num, b.num));
    return make(ring_.mul(a.num, b.num), ring_.mul(a.den, b.den));
  }

  Element inv(const Element& a) const {
    if (is_zero(a)) throw DivisionByZero();
    return make(a.den, a.num);
  }

  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  /// (u, v) with u*a == v*b; polynomial inputs give polynomial, gcd-free outputs.
  std::pair<Element, Element> cancel_factors(const Element& a, const Element& b) const {
    if (a.den.is_one() && b.den.is_one()) {
      ParamPoly g = ring_.gcd(a.num, b.num);
      ParamPoly u = ring_.exact_div(b.num, g);
      ParamPoly v = ring_.exact_div(a.num, g);
      if (characteristic() == 0 && sgn(u.leading_coeff()) < 0) {
        u = ring_.neg(std::move(u));
        v = ring_.neg(std::move(v));
      }
      return {from_poly(std::move(u)), from_poly(std::move(v))};
    }
    return {one(), div(a, b)};
  }

  /// Scales by an element of k(t)* so every coefficient is a polynomial and the
  /// numerators have no common factor.
  void make_primitive(std::span<Element> coeffs) const {
    if (coeffs.empty()) return;
    ParamPoly den_lcm = ring_.constant(1);
    for (const auto& c : coeffs) {
      if (c.den.is_one()) continue;
      ParamPoly g = ring_.gcd(den_lcm, c.den);
      den_lcm = ring_.mul(den_lcm, ring_.exact_div(c.den, g));
    }
    if (!den_lcm.is_one()) {
      for (auto& c : coeffs) {
        c = from_poly(ring_.mul(c.num, ring_.exact_div(den_lcm, c.den)));
      }
    }
    ParamPoly content;
    for (const auto& c : coeffs) {
      content = content.is_zero() ? ring_.normalize_unit(c.num) : ring_.gcd(content, c.num);
      if (content.is_one()) break;
    }
    const mpz_class& lead = coeffs.front().num.leading_coeff();
    bool flip = characteristic() == 0 ? sgn(lead) < 0 : false;
    if (content.is_one() && !flip) {
      if (characteristic() == 0 || lead == 1) return;
    }
    if (characteristic() != 0) {
      // content is monic; fold the leading unit of the first coefficient in as well
      ParamPoly first = ring_.exact_div(coeffs.front().num, content);
      content = ring_.scale(std::move(content), first.leading_coeff());
    } else if (flip) {
      content = ring_.neg(std::move(content));
    }
    for (auto& c : coeffs) c.num = ring_.exact_div(c.num, content);
  }

  /// Divides out only the integer content and the common power of each parameter;
  /// falls back to make_primitive when some coefficient has a denominator.
  void remove_cheap_content(std::span<Element> coeffs) const {
    if (coeffs.empty()) return;
    for (const auto& c : coeffs) {
      if (!c.den.is_one()) return make_primitive(coeffs);
    }
    const std::size_t s = names_.size();
    ParamExponents low;
    low.fill(std::numeric_limits<std::uint16_t>::max());
    mpz_class g = 0;
    for (const auto& c : coeffs) {
      for (const auto& t : c.num.terms) {
        for (std::size_t i = 0; i < s; ++i) low[i] = std::min(low[i], t.exps[i]);
        if (characteristic() == 0 && g != 1) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
      }
    }
    bool shift = false;
    for (std::size_t i = 0; i < s; ++i) shift = shift || low[i] > 0;
    const bool divide = characteristic() == 0 && g > 1;
    if (!shift && !divide) return;
    for (auto& c : coeffs) {
      for (auto& t : c.num.terms) {
        for (std::size_t i = 0; i < s; ++i) t.exps[i] = static_cast<std::uint16_t>(t.exps[i] - low[i]);
        if (divide) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
      }
    }
  }

  std::string to_string(const Element& a) const {
    if (a.den.is_one()) return ring_.to_string(a.num, names_);
    std::string num = ring_.to_string(a.num, names_);
    std::string den = ring_.to_string(a.den, names_);
    if (a.num.terms.size() > 1) num = "(" + num + ")";
    if (a.den.terms.size() > 1 || (!a.den.is_constant() && a.den.terms[0].coeff != 1)) den = "(" + den + ")";
    return num + "/" + den;
  }

  /// True when the printed form would start with a minus sign.
  bool is_negative(const Element& a) const {
    return characteristic() == 0 && a.den.is_one() && a.num.is_constant() && !a.num.is_zero() &&
           sgn(a.num.leading_coeff()) < 0;
  }

  /// Non-constant coefficients print parenthesized in front of a monomial.
  bool needs_parentheses(const Element& a) const {
    return !(a.den.is_one() && a.num.is_constant());
  }

  bool operator==(const RationalFunctionField& o) const {
    return characteristic() == o.characteristic() && names_ == o.names_;
  }

 private:
  ParamRing ring_;
  std::vector<std::string> names_;
};

}  // namespace hcstd
