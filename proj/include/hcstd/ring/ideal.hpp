#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "hcstd/errors.hpp"
#include "hcstd/ring/polynomial.hpp"

namespace hcstd {

/// Generator set S of an ideal in a shared ring. Zero generators are removed.
template <class Field>
struct IdealPresentation {
  using Ring = PolyRing<Field>;
  using Poly = typename Ring::Poly;

  std::shared_ptr<const Ring> ring;
  std::vector<Poly> generators;

  IdealPresentation() = default;
  IdealPresentation(std::shared_ptr<const Ring> r, std::vector<Poly> gens)
      : ring(std::move(r)), generators(std::move(gens)) {
    std::erase_if(generators, [](const Poly& p) { return p.is_zero(); });
  }
};

/// Partial derivatives of F (Milnor ideal), followed by F itself when include_f is
/// set (Tjurina ideal).
template <class Field>
IdealPresentation<Field> jacobian_ideal(std::shared_ptr<const PolyRing<Field>> ring,
                                        const Polynomial<typename Field::Element>& f,
                                        bool include_f) {
  if (f.is_zero()) throw InvalidArgument("jacobian of the zero polynomial");
  std::vector<Polynomial<typename Field::Element>> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(ring->derivative(f, i));
  if (include_f) gens.push_back(f);
  return {std::move(ring), std::move(gens)};
}

/// Scales each generator by an element of K* into A[x] with coprime coefficients
/// (lcm of denominators, then content removal); zero generators are dropped.
template <class Field>
IdealPresentation<Field> clear_denominators(const IdealPresentation<Field>& ideal) {
  std::vector<Polynomial<typename Field::Element>> out;
  out.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators) {
    if (!g.is_zero()) out.push_back(ideal.ring->primitive(g));
  }
  return {ideal.ring, std::move(out)};
}

}  // namespace hcstd
