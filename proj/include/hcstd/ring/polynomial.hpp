#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "hcstd/errors.hpp"
#include "hcstd/ring/monomial.hpp"

namespace hcstd {

template <class E>
struct Term {
  E coeff;
  Monomial mono;
};

/// Sparse polynomial: terms strictly descending under the ring ordering, no zero
/// coefficients. Construct through PolyRing, which restores the canonical form.
template <class E>
class Polynomial {
 public:
  using Element = E;

  Polynomial() = default;

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term<E>>& terms() const noexcept { return terms_; }

  const Term<E>& lead() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().mono; }
  const E& lc() const { return terms_.front().coeff; }

  /// Maximal total degree over all terms.
  unsigned degree() const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  unsigned ecart() const noexcept { return is_zero() ? 0 : degree() - lm().degree(); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

  /// Takes terms that are already canonical (sorted, merged, nonzero).
  static Polynomial from_canonical(std::vector<Term<E>> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  std::vector<Term<E>>& mutable_terms() noexcept { return terms_; }

 private:
  std::vector<Term<E>> terms_;
};

struct NoBound {
  friend bool operator==(const NoBound&, const NoBound&) = default;
};

/// Drop every term of total degree > degree.
struct DegreeBound {
  unsigned degree = 0;
  friend bool operator==(const DegreeBound&, const DegreeBound&) = default;
};

/// Drop every term whose monomial is strictly smaller than `noether` (ds only).
struct MonomialBound {
  Monomial noether;
  friend bool operator==(const MonomialBound&, const MonomialBound&) = default;
};

using TruncationBound = std::variant<NoBound, DegreeBound, MonomialBound>;

/// Coefficient field plus ordering; all polynomial arithmetic goes through here.
template <class Field>
class PolyRing {
 public:
  using FieldType = Field;
  using Element = typename Field::Element;
  using Poly = Polynomial<Element>;
  using TermT = Term<Element>;

  PolyRing(Field field, OrderSpec order) : field_(std::move(field)), order_(std::move(order)) {}

  const Field& field() const noexcept { return field_; }
  const OrderSpec& order() const noexcept { return order_; }
  std::size_t nvars() const noexcept { return order_.size(); }

  Monomial one_monomial() const { return Monomial(nvars()); }
  Monomial variable_monomial(std::size_t i, unsigned e = 1) const {
    return Monomial::variable(nvars(), i, e);
  }

  Poly zero() const { return {}; }
  Poly constant(Element c) const { return monomial(std::move(c), one_monomial()); }
  Poly monomial(Element c, Monomial m) const {
    check(m);
    std::vector<TermT> t;
    if (!field_.is_zero(c)) t.push_back({std::move(c), std::move(m)});
    return Poly::from_canonical(std::move(t));
  }
  Poly variable(std::size_t i) const { return monomial(field_.one(), variable_monomial(i)); }

  /// Sorts, merges equal monomials and drops zero coefficients.
  Poly from_terms(std::vector<TermT> terms) const {
    for (const auto& t : terms) check(t.mono);
    std::sort(terms.begin(), terms.end(),
              [this](const TermT& a, const TermT& b) { return order_.greater(a.mono, b.mono); });
    std::vector<TermT> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = field_.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
    return Poly::from_canonical(std::move(out));
  }

  Poly add(const Poly& f, const Poly& g) const { return linear(field_.one(), f, field_.one(), g); }
  Poly sub(const Poly& f, const Poly& g) const {
    return linear(field_.one(), f, field_.neg(field_.one()), g);
  }
  Poly neg(const Poly& f) const { return scale(f, field_.neg(field_.one())); }

  Poly scale(const Poly& f, const Element& c) const {
    if (field_.is_zero(c)) return {};
    std::vector<TermT> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back({field_.mul(t.coeff, c), t.mono});
    return Poly::from_canonical(std::move(out));
  }

  Poly mul_term(const Poly& f, const TermT& t) const {
    check(t.mono);
    if (field_.is_zero(t.coeff)) return {};
    std::vector<TermT> out;
    out.reserve(f.size());
    for (const auto& s : f.terms()) {
      check(s.mono);
      out.push_back({field_.mul(s.coeff, t.coeff), s.mono * t.mono});
    }
    return Poly::from_canonical(std::move(out));
  }

  Poly mul(const Poly& f, const Poly& g) const {
    Poly acc;
    for (const auto& t : g.terms()) acc = add(acc, mul_term(f, t));
    return acc;
  }

  Poly pow(const Poly& f, unsigned e) const {
    Poly r = constant(field_.one());
    for (unsigned i = 0; i < e; ++i) r = mul(r, f);
    return r;
  }

  /// a*f + b*g in canonical form.
  Poly linear(const Element& a, const Poly& f, const Element& b, const Poly& g) const {
    if (!f.is_zero()) check(f.lm());
    if (!g.is_zero()) check(g.lm());
    return combine(a, f, field_.neg(b), nullptr, g, TruncationBound{NoBound{}});
  }

  /// a*f - b*(m*g), with every term outside the bound dropped. The workhorse of
  /// reduction; a null m means m = 1.
  Poly combine(const Element& a, const Poly& f, const Element& b, const Monomial* m, const Poly& g,
               const TruncationBound& bound) const {
    std::vector<TermT> out;
    out.reserve(f.size() + g.size());
    const auto& ft = f.terms();
    const auto& gt = g.terms();
    const bool a_one = field_.is_one(a);
    std::size_t i = 0, j = 0;
    Monomial gm;
    auto load = [&] {
      if (j < gt.size()) gm = m ? gt[j].mono * *m : gt[j].mono;
    };
    load();
    while (i < ft.size() || j < gt.size()) {
      std::strong_ordering c = std::strong_ordering::less;
      if (i == ft.size()) c = std::strong_ordering::less;
      else if (j == gt.size()) c = std::strong_ordering::greater;
      else c = order_.compare_unchecked(ft[i].mono, gm);
      if (c == std::strong_ordering::greater) {
        if (!keep(ft[i].mono, bound)) {
          if (cut_rest(bound)) break;
          ++i;
          continue;
        }
        out.push_back({a_one ? ft[i].coeff : field_.mul(a, ft[i].coeff), ft[i].mono});
        ++i;
      } else if (c == std::strong_ordering::less) {
        if (!keep(gm, bound)) {
          if (cut_rest(bound)) break;
          ++j;
          load();
          continue;
        }
        Element v = field_.neg(field_.mul(b, gt[j].coeff));
        if (!field_.is_zero(v)) out.push_back({std::move(v), gm});
        ++j;
        load();
      } else {
        if (!keep(gm, bound)) {
          if (cut_rest(bound)) break;
          ++i;
          ++j;
          load();
          continue;
        }
        Element v = field_.sub(a_one ? ft[i].coeff : field_.mul(a, ft[i].coeff), field_.mul(b, gt[j].coeff));
        if (!field_.is_zero(v)) out.push_back({std::move(v), gm});
        ++i;
        ++j;
        load();
      }
    }
    return Poly::from_canonical(std::move(out));
  }

  /// Removes the terms outside the bound.
  Poly truncate(const Poly& f, const TruncationBound& bound) const {
    if (std::holds_alternative<NoBound>(bound)) return f;
    std::vector<TermT> out;
    for (const auto& t : f.terms()) {
      if (keep(t.mono, bound)) out.push_back(t);
      else if (cut_rest(bound)) break;
    }
    return Poly::from_canonical(std::move(out));
  }

  /// True when the monomial survives truncation.
  bool keep(const Monomial& m, const TruncationBound& bound) const {
    if (const auto* d = std::get_if<DegreeBound>(&bound)) return m.degree() <= d->degree;
    if (const auto* n = std::get_if<MonomialBound>(&bound)) return !order_.less(m, n->noether);
    return true;
  }

  /// Partial derivative with respect to x_i.
  Poly derivative(const Poly& f, std::size_t i) const {
    std::vector<TermT> out;
    for (const auto& t : f.terms()) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      Element c = field_.mul(t.coeff, field_.from_int(e));
      if (field_.is_zero(c)) continue;
      Monomial m = t.mono;
      m.set(i, e - 1);
      out.push_back({std::move(c), std::move(m)});
    }
    return from_terms(std::move(out));
  }

  /// Canonical unit multiple (content-free / monic, depending on the field).
  Poly primitive(Poly f) const {
    if (f.is_zero()) return f;
    std::vector<Element> coeffs;
    coeffs.reserve(f.size());
    for (auto& t : f.mutable_terms()) coeffs.push_back(std::move(t.coeff));
    field_.make_primitive(coeffs);
    auto& terms = f.mutable_terms();
    for (std::size_t k = 0; k < terms.size(); ++k) terms[k].coeff = std::move(coeffs[k]);
    return f;
  }

  /// Cheaper partial content removal where the field offers one, else primitive().
  Poly light_primitive(Poly f) const {
    if constexpr (requires(std::span<Element> s) { field_.remove_cheap_content(s); }) {
      if (f.is_zero()) return f;
      std::vector<Element> coeffs;
      coeffs.reserve(f.size());
      for (auto& t : f.mutable_terms()) coeffs.push_back(std::move(t.coeff));
      field_.remove_cheap_content(coeffs);
      auto& terms = f.mutable_terms();
      for (std::size_t k = 0; k < terms.size(); ++k) terms[k].coeff = std::move(coeffs[k]);
      return f;
    } else {
      return primitive(std::move(f));
    }
  }

  Poly monic(const Poly& f) const {
    if (f.is_zero() || field_.is_one(f.lc())) return f;
    return scale(f, field_.inv(f.lc()));
  }

  bool operator==(const PolyRing& o) const { return field_ == o.field_ && order_ == o.order_; }

 private:
  void check(const Monomial& m) const {
    if (m.size() != nvars()) throw DomainMismatch("monomial does not belong to this ring");
  }

  // For degree-compatible orderings terms come in ascending degree, and for a
  // monomial bound they come in descending order, so the first dropped term ends
  // the polynomial.
  bool cut_rest(const TruncationBound& bound) const {
    if (std::holds_alternative<MonomialBound>(bound)) return true;
    return std::holds_alternative<DegreeBound>(bound) && order_.degree_compatible();
  }

  Field field_;
  OrderSpec order_;
};

}  // namespace hcstd
