#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "hcstd/basis.hpp"
#include "hcstd/errors.hpp"
#include "hcstd/ring/monomial.hpp"
#include "hcstd/ring/polynomial.hpp"

namespace hcstd {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = m.size();
    for (std::size_t i = 0; i < m.size(); ++i) h = h * 1000003u ^ m[i];
    return h;
  }
};

/// Minimal monomial generators of a leading ideal, sorted descending under the ordering.
struct Staircase {
  std::vector<Monomial> generators;
  std::size_t nvars = 0;
  OrderSpec order;

  bool contains(const Monomial& m) const {
    if (masks_.size() != generators.size()) {
      return std::any_of(generators.begin(), generators.end(),
                         [&](const Monomial& g) { return g.divides(m); });
    }
    const std::uint64_t mask = m.divisibility_mask();
    for (std::size_t k = 0; k < generators.size(); ++k) {
      if ((masks_[k] & ~mask) == 0 && generators[k].divides(m)) return true;
    }
    return false;
  }

  bool is_whole_ring() const { return generators.size() == 1 && generators[0].is_one(); }

  /// Minimizes and sorts; the result is independent of input order.
  static Staircase from_monomials(std::vector<Monomial> monos, OrderSpec order) {
    Staircase st;
    st.nvars = order.size();
    st.order = std::move(order);
    std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return a.exponents() < b.exponents();
    });
    std::vector<std::uint64_t> masks;
    for (auto& m : monos) {
      const std::uint64_t mask = m.divisibility_mask();
      bool redundant = false;
      for (std::size_t k = 0; k < st.generators.size() && !redundant; ++k) {
        redundant = (masks[k] & ~mask) == 0 && st.generators[k].divides(m);
      }
      if (!redundant) {
        st.generators.push_back(m);
        masks.push_back(mask);
      }
    }
    st.sort_and_index();
    return st;
  }

  void sort_and_index() {
    std::sort(generators.begin(), generators.end(),
              [this](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    masks_.clear();
    for (const auto& g : generators) masks_.push_back(g.divisibility_mask());
  }

 private:
  std::vector<std::uint64_t> masks_;
};

/// Finite codimension test: every variable has a pure power in the staircase.
inline bool is_zero_dimensional(const Staircase& st) {
  if (st.is_whole_ring()) return true;
  for (std::size_t i = 0; i < st.nvars; ++i) {
    bool found = false;
    for (const auto& g : st.generators) {
      if (g[i] > 0 && g.degree() == g[i]) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// Visits every standard monomial (not in the staircase ideal); requires zero-dimensionality.
inline void for_each_standard_monomial(const Staircase& st, const std::function<void(const Monomial&)>& fn) {
  if (!is_zero_dimensional(st)) throw NotZeroDimensional("staircase is not zero-dimensional");
  if (st.is_whole_ring()) return;
  std::vector<unsigned> box(st.nvars, 0);
  for (const auto& g : st.generators) {
    for (std::size_t i = 0; i < st.nvars; ++i) {
      if (g[i] > 0 && g.degree() == g[i]) box[i] = box[i] == 0 ? g[i] : std::min(box[i], g[i]);
    }
  }
  Monomial m(st.nvars);
  // depth-first over variables; a monomial in the ideal prunes all its extensions
  std::function<void(std::size_t)> walk = [&](std::size_t var) {
    if (var == st.nvars) {
      fn(m);
      return;
    }
    for (unsigned e = 0; e < box[var]; ++e) {
      m.set(var, e);
      if (st.contains(m)) break;
      walk(var + 1);
    }
    m.set(var, 0);
  };
  walk(0);
}

/// Number of standard monomials, or nullopt when infinite.
inline std::optional<std::uint64_t> vdim(const Staircase& st) {
  if (!is_zero_dimensional(st)) return std::nullopt;
  std::uint64_t count = 0;
  for_each_standard_monomial(st, [&](const Monomial&) { ++count; });
  return count;
}

/// The order-smallest monomial outside the leading ideal; empty for the whole ring.
struct HighestCorner {
  std::optional<Monomial> monomial;

  bool is_whole_ring() const noexcept { return !monomial.has_value(); }
  friend bool operator==(const HighestCorner&, const HighestCorner&) = default;
};

inline HighestCorner highest_corner(const Staircase& st) {
  if (!is_zero_dimensional(st)) throw NotZeroDimensional("highest corner of a non-zero-dimensional ideal");
  HighestCorner hc;
  for_each_standard_monomial(st, [&](const Monomial& m) {
    if (!hc.monomial || st.order.less(m, *hc.monomial)) hc.monomial = m;
  });
  return hc;
}

/// Cutoff derived from a highest corner m:
///   ds: drop monomials below x_n*m; Ds: drop degree > deg(m)+1;
///   ws: drop degree > d where d is the least degree with <x>^d in the ideal.
inline TruncationBound truncation_bound(const HighestCorner& hc, const OrderSpec& order, const Staircase& st) {
  if (hc.is_whole_ring()) return NoBound{};
  const Monomial& m = *hc.monomial;
  switch (order.kind()) {
    case OrderKind::ds:
      return MonomialBound{m * Monomial::variable(m.size(), order.smallest_variable())};
    case OrderKind::Ds:
      return DegreeBound{m.degree() + 1};
    case OrderKind::ws: {
      unsigned top = 0;
      for_each_standard_monomial(st, [&](const Monomial& s) { top = std::max(top, s.degree()); });
      return DegreeBound{top + 1};
    }
  }
  return NoBound{};
}

namespace detail {

inline void monomials_of_degree(std::size_t nvars, unsigned degree, const std::function<void(const Monomial&)>& fn) {
  Monomial m(nvars);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
    if (var + 1 == nvars) {
      m.set(var, left);
      fn(m);
      m.set(var, 0);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(var, e);
      rec(var + 1, left - e);
    }
    m.set(var, 0);
  };
  if (nvars == 0) return;
  rec(0, degree);
}

}  // namespace detail

/// Minimal generators of the monomial ideal of everything a bound discards.
inline std::vector<Monomial> bound_generators(const TruncationBound& bound, const OrderSpec& order) {
  std::vector<Monomial> out;
  const std::size_t n = order.size();
  if (const auto* d = std::get_if<DegreeBound>(&bound)) {
    detail::monomials_of_degree(n, d->degree + 1, [&](const Monomial& m) { out.push_back(m); });
  } else if (const auto* b = std::get_if<MonomialBound>(&bound)) {
    const Monomial& noether = b->noether;
    std::unordered_set<Monomial, MonomialHash> level;
    detail::monomials_of_degree(n, noether.degree(), [&](const Monomial& m) {
      if (order.less(m, noether)) {
        out.push_back(m);
        level.insert(m);
      }
    });
    detail::monomials_of_degree(n, noether.degree() + 1, [&](const Monomial& m) {
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i] == 0) continue;
        Monomial q = m;
        q.set(i, m[i] - 1);
        if (level.count(q)) return;
      }
      out.push_back(m);
    });
  }
  return out;
}

/// Staircase of <lms> + <monomials discarded by the bound>.
inline Staircase augmented_staircase(const std::vector<Monomial>& lms, const TruncationBound& bound,
                                     const OrderSpec& order) {
  Staircase base = Staircase::from_monomials(lms, order);
  if (std::holds_alternative<NoBound>(bound)) return base;
  auto kept_by = [&](const Monomial& m) {
    if (const auto* d = std::get_if<DegreeBound>(&bound)) return m.degree() <= d->degree;
    return !order.less(m, std::get<MonomialBound>(bound).noether);
  };
  Staircase st;
  st.nvars = order.size();
  st.order = order;
  for (const auto& g : base.generators) {
    if (kept_by(g)) st.generators.push_back(g);
  }
  for (const auto& m : bound_generators(bound, order)) {
    if (!base.contains(m)) st.generators.push_back(m);
  }
  st.sort_and_index();
  return st;
}

/// Minimal generators of the leading ideal of a basis (including the monomials
/// beyond its truncation bound, if any).
template <class Field>
Staircase leading_ideal(const StandardBasis<Field>& basis) {
  std::vector<Monomial> lms;
  for (const auto& g : basis.elements) {
    if (!g.is_zero()) lms.push_back(g.lm());
  }
  return augmented_staircase(lms, basis.bound, basis.ring->order());
}

}  // namespace hcstd
