#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "hcstd/coeff/prime_field.hpp"
#include "hcstd/coeff/rationals.hpp"
#include "hcstd/ring/ideal.hpp"
#include "hcstd/ring/polynomial.hpp"
#include "oracle.hpp"

namespace testing_support {

using namespace hcstd;

/// A small zero-dimensional ideal with integer coefficients, plus its oracle data.
struct CorpusIdeal {
  OrderSpec order;
  std::vector<oracle::OPoly> gens;
  oracle::LocalAlgebra local;
};

inline oracle::Order oracle_order(const OrderSpec& o) {
  oracle::Order r;
  r.kind = o.kind() == OrderKind::ds ? oracle::Kind::ds : o.kind() == OrderKind::Ds ? oracle::Kind::Ds : oracle::Kind::ws;
  r.weights = o.weights();
  return r;
}

template <class Field>
Polynomial<typename Field::Element> to_library(const PolyRing<Field>& ring, const oracle::OPoly& f) {
  Polynomial<typename Field::Element> acc;
  for (const auto& t : f) acc = ring.add(acc, ring.monomial(ring.field().from_int(t.coeff), Monomial(t.exps)));
  return acc;
}

template <class Field>
IdealPresentation<Field> to_ideal(std::shared_ptr<const PolyRing<Field>> ring, const std::vector<oracle::OPoly>& gens) {
  std::vector<Polynomial<typename Field::Element>> out;
  for (const auto& g : gens) out.push_back(to_library(*ring, g));
  return {std::move(ring), std::move(out)};
}

inline std::vector<std::string> var_names(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "w"};
  return {names, names + n};
}

/// Seeded corpus of zero-dimensional ideals in 2-3 variables with generator degrees
/// at most 6 and local vdim in [1, max_vdim]; orderings cycle through ds, ds, Ds, ws.
inline std::vector<CorpusIdeal> random_corpus(std::size_t count, std::uint64_t seed = 2024,
                                              std::uint64_t max_vdim = 60) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusIdeal> out;
  auto coeff = [&] {
    std::int64_t c = static_cast<std::int64_t>(rng() % 14) - 7;
    return c >= 0 ? c + 1 : c;
  };
  auto random_term = [&](std::size_t n, unsigned min_deg) {
    unsigned d = min_deg + static_cast<unsigned>(rng() % (7 - min_deg));
    oracle::Exps e(n, 0);
    for (unsigned k = 0; k < d; ++k) ++e[rng() % n];
    return oracle::OTerm{coeff(), e};
  };
  std::size_t k = 0;
  while (out.size() < count) {
    const std::size_t n = 2 + rng() % 2;
    OrderKind kind = std::array{OrderKind::ds, OrderKind::ds, OrderKind::Ds, OrderKind::ws}[k++ % 4];
    std::vector<unsigned> w;
    if (kind == OrderKind::ws) {
      for (std::size_t i = 0; i < n; ++i) w.push_back(1 + static_cast<unsigned>(rng() % 3));
    }
    CorpusIdeal c{OrderSpec(kind, var_names(n), w), {}, {}};
    const std::size_t ngens = n + rng() % 2;
    for (std::size_t g = 0; g < ngens; ++g) {
      oracle::OPoly f;
      if (g < n && rng() % 4 != 0) {
        oracle::Exps e(n, 0);
        e[g] = 1 + static_cast<unsigned>(rng() % 4);
        f.push_back({coeff(), e});
      }
      const std::size_t extra = 1 + rng() % 3;
      for (std::size_t t = 0; t < extra; ++t) f.push_back(random_term(n, 1));
      c.gens.push_back(std::move(f));
    }
    auto local = oracle::local_algebra(c.gens, n, oracle_order(c.order), 2147483629, 16, max_vdim);
    if (!local || local->vdim == 0 || local->vdim > max_vdim) continue;
    c.local = std::move(*local);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace testing_support
