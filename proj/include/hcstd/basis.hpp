#pragma once

#include <memory>
#include <vector>

#include "hcstd/ring/polynomial.hpp"

namespace hcstd {

/// Output of a standard basis computation.
///
/// minimal: no leading monomial divides another. reduced: additionally monic, and no
/// tail monomial lies in the leading ideal. `bound` records the truncation that was in
/// force; a bounded basis generates the ideal of S together with the monomials
/// beyond the bound.
template <class Field>
struct StandardBasis {
  using Ring = PolyRing<Field>;
  using Poly = typename Ring::Poly;

  std::shared_ptr<const Ring> ring;
  std::vector<Poly> elements;
  bool minimal = false;
  bool reduced = false;
  TruncationBound bound = NoBound{};
};

}  // namespace hcstd
