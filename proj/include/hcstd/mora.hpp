#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <variant>
#include <optional>
#include <set>
#include <span>
#include <type_traits>
#include <vector>

#include "hcstd/basis.hpp"
#include "hcstd/coeff/prime_field.hpp"
#include "hcstd/corner.hpp"
#include "hcstd/errors.hpp"
#include "hcstd/ring/ideal.hpp"
#include "hcstd/ring/polynomial.hpp"

namespace hcstd {

struct StdOptions {
  /// Abort with Timeout once this point in time has passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Finish with a reduced basis when the result is zero-dimensional.
  bool reduce = true;
  /// Once the partial leading ideal is zero-dimensional, drop terms below its highest
  /// corner. Such terms lie in the ideal, so the result is unchanged. Only applies
  /// to unbounded or monomial-bounded runs.
  bool dynamic_corner = true;
};

/// s-polynomial u*(m/LM f)*f - v*(m/LM g)*g, m = lcm(LM f, LM g), with the leading
/// monomials cancelling. Over Q and k(t) u and v are cofactors rather than quotients.
template <class Field>
Polynomial<typename Field::Element> spoly(const PolyRing<Field>& ring, const Polynomial<typename Field::Element>& f,
                                          const Polynomial<typename Field::Element>& g,
                                          const TruncationBound& bound = NoBound{}) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("s-polynomial of zero");
  const Monomial m = lcm(f.lm(), g.lm());
  const Monomial mf = quotient(m, f.lm());
  const Monomial mg = quotient(m, g.lm());
  auto [u, v] = ring.field().cancel_factors(f.lc(), g.lc());
  auto shifted = ring.mul_term(f, {ring.field().one(), mf});
  return ring.combine(u, shifted, v, &mg, g, bound);
}

namespace detail {

template <class Field>
inline constexpr bool kFractionFree = !std::is_same_v<Field, PrimeField>;

inline void check_deadline(const StdOptions& opts) {
  if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline) throw Timeout();
}

template <class E>
struct Reducer {
  Polynomial<E> poly;
  std::uint64_t mask = 0;
  unsigned ecart = 0;

  explicit Reducer(Polynomial<E> p)
      : poly(std::move(p)), mask(poly.lm().divisibility_mask()), ecart(poly.ecart()) {}
};

// Mora's normal form: among reducers whose leading monomial divides LM(h) take one
// of minimal ecart (then smaller LM, then earlier); when that ecart exceeds ecart(h),
// h itself joins the reducer pool before the step.
template <class Field>
Polynomial<typename Field::Element> weak_nf(const PolyRing<Field>& ring, Polynomial<typename Field::Element> h,
                                            std::span<const Reducer<typename Field::Element>> pool,
                                            const TruncationBound& bound, const StdOptions& opts) {
  using E = typename Field::Element;
  const auto& order = ring.order();
  std::vector<Reducer<E>> extra;
  h = ring.truncate(h, bound);
  std::size_t steps = 0;
  while (!h.is_zero()) {
    if ((++steps & 0xff) == 0) check_deadline(opts);
    const Monomial& lm = h.lm();
    const std::uint64_t mask = lm.divisibility_mask();
    const Reducer<E>* best = nullptr;
    auto consider = [&](const Reducer<E>& r) {
      if ((r.mask & ~mask) != 0 || !r.poly.lm().divides(lm)) return;
      if (!best || r.ecart < best->ecart ||
          (r.ecart == best->ecart && order.less(r.poly.lm(), best->poly.lm()))) {
        best = &r;
      }
    };
    for (const auto& r : pool) consider(r);
    for (const auto& r : extra) consider(r);
    if (!best) break;
    const unsigned hecart = h.ecart();
    std::optional<Reducer<E>> keep_best;
    if (best->ecart > hecart) {
      keep_best.emplace(*best);  // extra may reallocate below
      best = &*keep_best;
      extra.emplace_back(h);
    }
    const Monomial m = quotient(lm, best->poly.lm());
    auto [u, v] = ring.field().cancel_factors(h.lc(), best->poly.lc());
    h = ring.combine(u, h, v, &m, best->poly, bound);
    if constexpr (kFractionFree<Field>) h = ring.primitive(std::move(h));
  }
  return h;
}

}  // namespace detail

/// Weak normal form of f with respect to G: returns h with u*f - h in <G> for a unit
/// u of the localization and LM(h) divisible by no LM(g_i). Every intermediate
/// polynomial is truncated to the bound. Without a bound and with opts.dynamic_corner,
/// terms below the highest corner of L(G) are dropped once L(G) is zero-dimensional.
template <class Field>
Polynomial<typename Field::Element> mora_weak_nf(const PolyRing<Field>& ring,
                                                 const Polynomial<typename Field::Element>& f,
                                                 std::span<const Polynomial<typename Field::Element>> basis,
                                                 const TruncationBound& bound = NoBound{},
                                                 const StdOptions& opts = {}) {
  std::vector<detail::Reducer<typename Field::Element>> pool;
  std::vector<Monomial> lms;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    pool.emplace_back(g);
    lms.push_back(g.lm());
  }
  TruncationBound b = bound;
  if (opts.dynamic_corner && std::holds_alternative<NoBound>(bound) && !lms.empty()) {
    Staircase st = Staircase::from_monomials(std::move(lms), ring.order());
    if (is_zero_dimensional(st) && !st.is_whole_ring()) b = MonomialBound{*highest_corner(st).monomial};
  }
  return detail::weak_nf(ring, f, std::span<const detail::Reducer<typename Field::Element>>(pool), b, opts);
}

template <class Field>
StandardBasis<Field> reduce_basis(const StandardBasis<Field>& basis);

namespace detail {

// A critical pair (i, j), or a polynomial whose reduction was postponed.
template <class E>
struct QueueItem {
  unsigned sugar = 0;
  Monomial lcm;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t seq = 0;
  std::optional<Polynomial<E>> pending;
};

// Ascending sugar (degree of the s-polynomial), then degree of the lcm, then the
// order-larger lcm, then insertion order.
struct QueueLess {
  const OrderSpec* order;
  template <class E>
  bool operator()(const QueueItem<E>& a, const QueueItem<E>& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    auto c = order->compare_unchecked(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
    return a.seq < b.seq;
  }
};

// Mora's algorithm with lazy reduction: a polynomial whose sugar grows past the
// cheapest queued item goes back into the queue, and every polynomial that Mora's
// rule adds to the reducer set stays there for the rest of the run.
template <class Field>
class StandardBasisBuilder {
 public:
  using E = typename Field::Element;
  using Poly = Polynomial<E>;
  using Item = QueueItem<E>;

  StandardBasisBuilder(const PolyRing<Field>& ring, TruncationBound bound, StdOptions opts)
      : ring_(ring), bound_(std::move(bound)), opts_(std::move(opts)), queue_(QueueLess{&ring.order()}) {}

  void add_generator(Poly f) {
    f = ring_.truncate(f, bound_);
    if (f.is_zero()) return;
    if constexpr (kFractionFree<Field>) f = ring_.primitive(std::move(f));
    push_pending(std::move(f));
  }

  void run() {
    while (!queue_.empty() && !unit_) {
      check_deadline(opts_);
      Item item = std::move(queue_.extract(queue_.begin()).value());
      Poly h;
      if (item.pending) {
        h = std::move(*item.pending);
      } else {
        h = spoly(ring_, basis_[item.i].poly, basis_[item.j].poly, bound_);
        if constexpr (kFractionFree<Field>) h = ring_.primitive(std::move(h));
      }
      if (auto r = reduce(std::move(h))) insert(std::move(*r));
    }
  }

  bool is_unit() const { return unit_; }

  std::vector<Poly> elements() const {
    std::vector<Poly> out;
    if (unit_) {
      out.push_back(ring_.constant(ring_.field().one()));
      return out;
    }
    for (const auto& r : basis_) out.push_back(r.poly);
    return out;
  }

 private:
  void push_pending(Poly f) {
    Item it;
    it.sugar = f.degree();
    it.lcm = f.lm();
    it.seq = seq_++;
    it.pending = std::move(f);
    queue_.insert(std::move(it));
  }

  // Weak normal form against basis and extra reducers; nullopt when postponed.
  std::optional<Poly> reduce(Poly h) {
    h = ring_.truncate(h, bound_);
    auto tidy = [&](Poly f) {
      if constexpr (kFractionFree<Field>) f = ring_.primitive(std::move(f));
      return f;
    };
    std::size_t steps = 0;
    while (!h.is_zero()) {
      if ((++steps & 0xff) == 0) check_deadline(opts_);
      const Monomial& lm = h.lm();
      const std::uint64_t mask = lm.divisibility_mask();
      const Reducer<E>* best = nullptr;
      bool best_extra = false;
      std::size_t best_index = 0;
      auto scan = [&](const std::vector<Reducer<E>>& pool, bool is_extra) {
        for (std::size_t k = 0; k < pool.size(); ++k) {
          const Reducer<E>& r = pool[k];
          if ((r.mask & ~mask) != 0 || !r.poly.lm().divides(lm)) continue;
          if (!best || r.ecart < best->ecart ||
              (r.ecart == best->ecart && ring_.order().less(r.poly.lm(), best->poly.lm()))) {
            best = &r;
            best_extra = is_extra;
            best_index = k;
          }
        }
      };
      if (finite_bound()) {
        // finitely many monomials survive, so plain reduction terminates
        for (std::size_t k = 0; k < basis_.size(); ++k) {
          const Reducer<E>& r = basis_[k];
          if ((r.mask & ~mask) != 0 || !r.poly.lm().divides(lm)) continue;
          if (!best || r.poly.size() < best->poly.size()) best = &r;
        }
        if (!best) return tidy(std::move(h));
      } else {
        scan(basis_, false);
        scan(extra_, true);
        if (!best) return tidy(std::move(h));
      }
      if (!finite_bound() && best->ecart > h.ecart()) {
        h = tidy(std::move(h));
        extra_.emplace_back(h);
        best = best_extra ? &extra_[best_index] : &basis_[best_index];
      }
      const Monomial m = quotient(lm, best->poly.lm());
      auto [u, v] = ring_.field().cancel_factors(h.lc(), best->poly.lc());
      h = ring_.combine(u, h, v, &m, best->poly, bound_);
      // full content removal is costly on long polynomials, so only a cheap part runs here
      if constexpr (kFractionFree<Field>) {
        if ((steps & 7) == 0) h = ring_.light_primitive(std::move(h));
      }
      if (!h.is_zero() && !queue_.empty() && h.degree() > queue_.begin()->sugar) {
        push_pending(tidy(std::move(h)));
        return std::nullopt;
      }
    }
    return h;
  }

  bool finite_bound() const { return !std::holds_alternative<NoBound>(bound_); }

  void insert(Poly h) {
    if (h.is_zero()) return;
    if (h.lm().is_one()) {
      unit_ = true;
      queue_.clear();
      return;
    }
    update_pairs(h);
    basis_.emplace_back(std::move(h));
    active_.push_back(true);
    if (opts_.dynamic_corner) tighten_bound();
  }

  // Gebauer-Moeller update without the product criterion.
  void update_pairs(const Poly& h) {
    const Monomial& lh = h.lm();
    const std::size_t k = basis_.size();
    const unsigned eh = h.ecart();

    for (auto it = queue_.begin(); it != queue_.end();) {
      if (it->pending) {
        ++it;
        continue;
      }
      const Monomial& l = it->lcm;
      if (lh.divides(l) && !(lcm(basis_[it->i].poly.lm(), lh) == l) &&
          !(lcm(basis_[it->j].poly.lm(), lh) == l)) {
        it = queue_.erase(it);
      } else {
        ++it;
      }
    }

    std::vector<Item> cand;
    for (std::size_t i = 0; i < k; ++i) {
      if (!active_[i]) continue;
      Item p;
      p.i = i;
      p.j = k;
      p.lcm = lcm(basis_[i].poly.lm(), lh);
      p.sugar = p.lcm.degree() + std::max(basis_[i].ecart, eh);
      cand.push_back(std::move(p));
    }
    std::vector<bool> dropped(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || dropped[b]) continue;
        if (cand[b].lcm.divides(cand[a].lcm)) {
          dropped[a] = true;
          break;
        }
      }
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (dropped[a]) continue;
      cand[a].seq = seq_++;
      queue_.insert(std::move(cand[a]));
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (active_[i] && lh.divides(basis_[i].poly.lm())) active_[i] = false;
    }
  }

  void tighten_bound() {
    if (std::holds_alternative<DegreeBound>(bound_)) return;
    const std::size_t n = ring_.nvars();
    std::vector<bool> pure(n, false);
    std::vector<Monomial> lms;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!active_[k]) continue;
      const Monomial& m = basis_[k].poly.lm();
      lms.push_back(m);
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i] == m.degree()) pure[i] = true;
      }
    }
    if (std::find(pure.begin(), pure.end(), false) != pure.end()) return;
    Staircase st = Staircase::from_monomials(std::move(lms), ring_.order());
    Monomial corner = *highest_corner(st).monomial;
    if (const auto* b = std::get_if<MonomialBound>(&bound_)) {
      if (!ring_.order().less(b->noether, corner)) return;
    }
    bound_ = MonomialBound{corner};
  }

  const PolyRing<Field>& ring_;
  TruncationBound bound_;
  StdOptions opts_;
  std::vector<Reducer<E>> basis_;
  std::vector<Reducer<E>> extra_;
  std::vector<bool> active_;
  std::set<Item, QueueLess> queue_;
  std::size_t seq_ = 0;
  bool unit_ = false;
};

// Keeps one element per minimal leading monomial and makes it monic.
template <class Field>
std::vector<Polynomial<typename Field::Element>> minimalize(const PolyRing<Field>& ring,
                                                            const std::vector<Polynomial<typename Field::Element>>& elems) {
  std::vector<Monomial> lms;
  for (const auto& g : elems) lms.push_back(g.lm());
  Staircase st = Staircase::from_monomials(lms, ring.order());
  std::vector<Polynomial<typename Field::Element>> out;
  for (const auto& gen : st.generators) {
    const Polynomial<typename Field::Element>* pick = nullptr;
    for (const auto& g : elems) {
      if (g.lm() == gen && (!pick || g.size() < pick->size())) pick = &g;
    }
    out.push_back(ring.monic(*pick));
  }
  return out;
}

}  // namespace detail

/// Standard basis of the ideal generated by S under a local ordering, truncating
/// every intermediate polynomial to the bound. With a bound the result is a basis
/// of S together with the discarded monomials. Zero-dimensional results come back
/// reduced (unless opts.reduce is false); others come back minimal.
template <class Field>
StandardBasis<Field> standard_basis(const IdealPresentation<Field>& ideal, const TruncationBound& bound = NoBound{},
                                    const StdOptions& opts = {}) {
  const auto& ring = *ideal.ring;
  detail::StandardBasisBuilder<Field> builder(ring, bound, opts);
  for (const auto& f : ideal.generators) builder.add_generator(f);
  builder.run();

  StandardBasis<Field> out;
  out.ring = ideal.ring;
  out.bound = bound;
  out.elements = builder.elements();
  if (builder.is_unit()) {
    out.bound = NoBound{};
    out.minimal = out.reduced = true;
    return out;
  }
  Staircase st = leading_ideal(out);
  if (opts.reduce && is_zero_dimensional(st)) return reduce_basis(out);
  if (!out.elements.empty()) out.elements = detail::minimalize(ring, out.elements);
  out.minimal = true;
  return out;
}

/// Minimal, monic, tail-reduced basis. Terms below the highest corner lie in the
/// ideal and are dropped, which makes tail reduction finite. Monomials discarded by
/// the basis' bound that are minimal in the leading ideal become basis elements.
template <class Field>
StandardBasis<Field> reduce_basis(const StandardBasis<Field>& basis) {
  using Poly = Polynomial<typename Field::Element>;
  const auto& ring = *basis.ring;
  const auto& field = ring.field();
  const auto& order = ring.order();
  Staircase st = leading_ideal(basis);
  if (!is_zero_dimensional(st)) {
    throw NotZeroDimensional("reduced basis needs a zero-dimensional ideal under a local ordering");
  }
  StandardBasis<Field> out;
  out.ring = basis.ring;
  out.bound = basis.bound;
  out.minimal = out.reduced = true;
  if (st.is_whole_ring()) {
    out.bound = NoBound{};
    out.elements.push_back(ring.constant(field.one()));
    return out;
  }
  const HighestCorner hc = highest_corner(st);
  const TruncationBound below_corner = MonomialBound{*hc.monomial};

  std::vector<Poly> reducers;
  for (const auto& gen : st.generators) {
    const Poly* pick = nullptr;
    for (const auto& g : basis.elements) {
      if (!g.is_zero() && g.lm() == gen && (!pick || g.size() < pick->size())) pick = &g;
    }
    // a generator below the corner lies in the ideal and is its own reduced element
    if (pick && !order.less(gen, *hc.monomial)) {
      reducers.push_back(ring.primitive(ring.truncate(*pick, below_corner)));
    } else {
      reducers.push_back(ring.monomial(field.one(), gen));
    }
  }

  // smallest leading monomial first, so every reducer used on a tail is already reduced
  for (std::size_t k = reducers.size(); k-- > 0;) {
    Poly g = reducers[k];
    std::size_t pos = 1;
    std::size_t steps = 0;
    while (pos < g.size()) {
      const auto& t = g.terms()[pos];
      const Poly* r = nullptr;
      for (const auto& cand : reducers) {
        if (cand.lm().divides(t.mono)) {
          r = &cand;
          break;
        }
      }
      if (!r) {
        ++pos;
        continue;
      }
      const Monomial m = quotient(t.mono, r->lm());
      auto [u, v] = field.cancel_factors(t.coeff, r->lc());
      g = ring.combine(u, g, v, &m, *r, below_corner);
      if constexpr (detail::kFractionFree<Field>) {
        if ((++steps & 7) == 0) g = ring.light_primitive(std::move(g));
      }
      // terms before pos are untouched: the reducer only contributes monomials <= t
    }
    reducers[k] = ring.primitive(std::move(g));
  }
  for (const auto& g : reducers) out.elements.push_back(ring.monic(g));
  std::sort(out.elements.begin(), out.elements.end(),
            [&](const Poly& a, const Poly& b) { return order.greater(a.lm(), b.lm()); });
  return out;
}

}  // namespace hcstd
