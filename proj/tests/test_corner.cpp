#include <gtest/gtest.h>

#include <random>

#include "hcstd/corner.hpp"
#include "hcstd/mora.hpp"
#include "hcstd/ring/parse.hpp"
#include "support.hpp"

using namespace hcstd;

namespace {

Monomial mono(std::vector<unsigned> e) { return Monomial(e); }

Staircase stair(std::vector<std::vector<unsigned>> gens, OrderSpec order) {
  std::vector<Monomial> m;
  for (auto& g : gens) m.push_back(Monomial(g));
  return Staircase::from_monomials(m, std::move(order));
}

const OrderSpec kDs2(OrderKind::ds, {"x", "y"});
const OrderSpec kDs3(OrderKind::ds, {"x", "y", "z"});

template <class Field>
StandardBasis<Field> basis_of(std::shared_ptr<const PolyRing<Field>> ring, std::vector<const char*> gens) {
  std::vector<Polynomial<typename Field::Element>> v;
  for (auto g : gens) v.push_back(parse_polynomial(*ring, g));
  return standard_basis(IdealPresentation<Field>(ring, v));
}

}  // namespace

TEST(LeadingIdeal, SpecExamples) {
  auto R = std::make_shared<const PolyRing<Rationals>>(Rationals{}, kDs2);
  auto st = leading_ideal(basis_of(R, {"x+y^2", "y^3"}));
  EXPECT_EQ(st.generators, (std::vector<Monomial>{mono({1, 0}), mono({0, 3})}));

  st = leading_ideal(basis_of(R, {"x", "x^2*y"}));
  EXPECT_EQ(st.generators, (std::vector<Monomial>{mono({1, 0})}));
  EXPECT_FALSE(is_zero_dimensional(st));
  EXPECT_EQ(vdim(st), std::nullopt);
  EXPECT_THROW(highest_corner(st), NotZeroDimensional);

  st = leading_ideal(basis_of(R, {"1+x"}));
  EXPECT_TRUE(st.is_whole_ring());
  EXPECT_EQ(vdim(st), 0u);
  EXPECT_TRUE(highest_corner(st).is_whole_ring());
}

TEST(LeadingIdeal, MinimalAndOrderIndependent) {
  auto a = stair({{2, 0}, {0, 3}, {2, 1}, {1, 1}}, kDs2);
  auto b = stair({{1, 1}, {0, 3}, {2, 0}}, kDs2);
  EXPECT_EQ(a.generators, b.generators);
  EXPECT_EQ(a.generators.size(), 3u);
  EXPECT_TRUE(a.contains(mono({3, 5})));
  EXPECT_FALSE(a.contains(mono({1, 0})));
}

TEST(Vdim, SpecExamples) {
  EXPECT_EQ(vdim(stair({{2, 0}, {0, 3}}, kDs2)), 6u);
  EXPECT_EQ(vdim(stair({{2, 0}, {1, 1}, {0, 4}}, kDs2)), 5u);
  EXPECT_EQ(vdim(stair({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, kDs3)), 8u);
  EXPECT_EQ(vdim(stair({{2, 0}, {1, 1}}, kDs2)), std::nullopt);
}

TEST(Vdim, AgreesWithBoxCount) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<oracle::Exps> gens;
    for (std::size_t i = 0; i < n; ++i) {
      oracle::Exps e(n, 0);
      e[i] = 1 + static_cast<unsigned>(rng() % 7);
      gens.push_back(e);
    }
    const std::size_t extra = rng() % 5;
    for (std::size_t k = 0; k < extra; ++k) {
      oracle::Exps e(n);
      for (auto& x : e) x = static_cast<unsigned>(rng() % 4);
      if (oracle::total(e) > 0) gens.push_back(e);
    }
    std::vector<Monomial> ms;
    for (auto& g : gens) ms.push_back(Monomial(g));
    auto st = Staircase::from_monomials(ms, OrderSpec(OrderKind::ds, testing_support::var_names(n)));
    EXPECT_EQ(vdim(st), oracle::monomial_colength(gens, n));
  }
}

TEST(HighestCorner, SpecExamples) {
  EXPECT_EQ(highest_corner(stair({{2, 0}, {0, 3}}, kDs2)).monomial, mono({1, 2}));
  EXPECT_EQ(highest_corner(stair({{2, 0}, {1, 1}, {0, 4}}, kDs2)).monomial, mono({0, 3}));
  EXPECT_EQ(highest_corner(stair({{0, 0}}, kDs2)).monomial, std::nullopt);
}

TEST(HighestCorner, DependsOnOrdering) {
  // x^2, y^3: standard monomials of degree 3 are x*y^2 only, for every local ordering here
  EXPECT_EQ(highest_corner(stair({{2, 0}, {0, 3}}, OrderSpec(OrderKind::Ds, {"x", "y"}))).monomial, mono({1, 2}));
  // x^3, y^3: x^2*y^2 is the unique degree 4 standard monomial
  EXPECT_EQ(highest_corner(stair({{3, 0}, {0, 3}}, OrderSpec(OrderKind::ws, {"x", "y"}, {2, 1}))).monomial,
            mono({2, 2}));
  // x^2, y^4 under ws(3,1): x*y^3 has the largest weight, 6
  EXPECT_EQ(highest_corner(stair({{2, 0}, {0, 4}}, OrderSpec(OrderKind::ws, {"x", "y"}, {3, 1}))).monomial,
            mono({1, 3}));
}

TEST(TruncationBound, SpecExamples) {
  auto ds = stair({{25, 0, 0}, {0, 1, 0}, {0, 0, 8}}, kDs3);
  HighestCorner hc{mono({24, 0, 7})};
  EXPECT_EQ(truncation_bound(hc, kDs3, ds), TruncationBound(MonomialBound{mono({24, 0, 8})}));

  OrderSpec Ds(OrderKind::Ds, {"x", "y"});
  EXPECT_EQ(truncation_bound(HighestCorner{mono({1, 2})}, Ds, stair({{2, 0}, {0, 3}}, Ds)),
            TruncationBound(DegreeBound{4}));

  OrderSpec ws(OrderKind::ws, {"x", "y"}, {1, 1});
  auto st = stair({{2, 0}, {0, 3}}, ws);
  EXPECT_EQ(truncation_bound(highest_corner(st), ws, st), TruncationBound(DegreeBound{4}));

  EXPECT_EQ(truncation_bound(HighestCorner{}, kDs2, stair({{0, 0}}, kDs2)), TruncationBound(NoBound{}));
}

TEST(TruncationBound, DiscardedMonomialsLieInTheLeadingIdeal) {
  for (const auto& c : testing_support::random_corpus(40, 31)) {
    std::vector<Monomial> ms;
    for (const auto& e : c.local.leading) ms.push_back(Monomial(e));
    auto st = Staircase::from_monomials(ms, c.order);
    auto bound = truncation_bound(highest_corner(st), c.order, st);
    for (const auto& g : bound_generators(bound, c.order)) EXPECT_TRUE(st.contains(g));
    // adding the discarded monomials does not change the staircase
    EXPECT_EQ(augmented_staircase(ms, bound, c.order).generators, st.generators);
  }
}

TEST(HighestCorner, MatchesOracleAndIsMinimal) {
  const auto corpus = testing_support::random_corpus(60, 7);
  for (const auto& c : corpus) {
    auto ring = std::make_shared<const PolyRing<PrimeField>>(PrimeField(2147483629u), c.order);
    auto G = standard_basis(testing_support::to_ideal(ring, c.gens));
    Staircase st = leading_ideal(G);
    std::vector<Monomial> expected;
    for (const auto& e : c.local.leading) expected.push_back(Monomial(e));
    EXPECT_EQ(st.generators, Staircase::from_monomials(expected, c.order).generators);
    EXPECT_EQ(vdim(st), c.local.vdim);

    HighestCorner hc = highest_corner(st);
    ASSERT_TRUE(hc.monomial);
    EXPECT_EQ(*hc.monomial, Monomial(*c.local.hc));
    EXPECT_FALSE(st.contains(*hc.monomial));
    // everything below the corner, up to a degree past the staircase, is in L(I)
    unsigned top = 0;
    for (const auto& g : st.generators) top = std::max(top, g.degree());
    for (unsigned d = 0; d <= top + 1; ++d) {
      detail::monomials_of_degree(c.order.size(), d, [&](const Monomial& m) {
        if (c.order.less(m, *hc.monomial)) {
          EXPECT_TRUE(st.contains(m)) << "below the corner but standard";
        }
      });
    }
  }
}
