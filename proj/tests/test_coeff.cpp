#include <gtest/gtest.h>

#include <random>

#include "hcstd/coeff/domain.hpp"
#include "hcstd/coeff/prime_field.hpp"
#include "hcstd/coeff/rational_function.hpp"
#include "hcstd/coeff/rationals.hpp"

using namespace hcstd;

namespace {

template <class Field, class Gen>
void check_field_axioms(const Field& F, Gen&& random, int rounds = 200) {
  for (int i = 0; i < rounds; ++i) {
    auto a = random(), b = random(), c = random();
    EXPECT_TRUE(F.equal(F.add(a, b), F.add(b, a)));
    EXPECT_TRUE(F.equal(F.mul(a, b), F.mul(b, a)));
    EXPECT_TRUE(F.equal(F.add(F.add(a, b), c), F.add(a, F.add(b, c))));
    EXPECT_TRUE(F.equal(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c))));
    EXPECT_TRUE(F.equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c))));
    EXPECT_TRUE(F.is_zero(F.add(a, F.neg(a))));
    EXPECT_TRUE(F.equal(F.sub(a, b), F.add(a, F.neg(b))));
    EXPECT_TRUE(F.equal(F.mul(a, F.one()), a));
    if (!F.is_zero(a)) {
      EXPECT_TRUE(F.is_one(F.mul(a, F.inv(a))));
      EXPECT_TRUE(F.equal(F.mul(F.div(b, a), a), b));
    }
  }
}

}  // namespace

TEST(PrimeField, RejectsCompositeAndLargeModuli) {
  EXPECT_THROW(PrimeField(1), InvalidArgument);
  EXPECT_THROW(PrimeField(32004), InvalidArgument);
  EXPECT_THROW(PrimeField(2147483659u), InvalidArgument);
  EXPECT_NO_THROW(PrimeField(2147483629u));
  EXPECT_NO_THROW(PrimeField(2));
}

TEST(PrimeField, Axioms) {
  for (std::uint32_t p : {2u, 7u, 32003u, 2147483629u}) {
    PrimeField F(p);
    std::mt19937_64 rng(p);
    check_field_axioms(F, [&] { return F.from_int(static_cast<std::int64_t>(rng() % (4ull * p)) - 2 * p); });
  }
}

TEST(PrimeField, ReducesRationals) {
  PrimeField F(7);
  EXPECT_EQ(F.from_mpq(mpq_class(1, 2)), 4u);
  EXPECT_EQ(F.from_int(-1), 6u);
  EXPECT_THROW(F.from_mpq(mpq_class(1, 7)), SpecializationFailure);
  EXPECT_THROW(F.inv(0), DivisionByZero);
}

TEST(Rationals, Axioms) {
  Rationals Q;
  std::mt19937_64 rng(1);
  check_field_axioms(Q, [&] {
    mpq_class q(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 50) + 1);
    q.canonicalize();
    return q;
  });
}

TEST(Rationals, IntegerFastPathAgreesWithGeneralPath) {
  Rationals Q;
  mpq_class a(mpz_class("123456789012345678901234567890")), b(-987654321);
  EXPECT_EQ(Q.add(a, b), mpq_class(a + b));
  EXPECT_EQ(Q.mul(a, b), mpq_class(a * b));
  EXPECT_EQ(Q.sub(b, a), mpq_class(b - a));
  EXPECT_EQ(Q.add(mpq_class(1, 2), mpq_class(1, 2)), mpq_class(1));
}

TEST(Rationals, CancelFactorsGivesIntegralCofactors) {
  Rationals Q;
  auto [u, v] = Q.cancel_factors(mpq_class(6), mpq_class(-4));
  EXPECT_EQ(u * 6, v * -4);
  EXPECT_EQ(u.get_den(), 1);
  EXPECT_EQ(v.get_den(), 1);
  EXPECT_GT(u, 0);
  EXPECT_EQ(u, 2);
}

TEST(Rationals, MakePrimitive) {
  Rationals Q;
  std::vector<mpq_class> c{mpq_class(-1, 2), mpq_class(3, 4), mpq_class(5)};
  Q.make_primitive(c);
  EXPECT_EQ(c[0], 2);
  EXPECT_EQ(c[1], -3);
  EXPECT_EQ(c[2], -20);
}

class RatFunTest : public ::testing::Test {
 protected:
  RationalFunctionField K{0, {"t"}};
  RationalFunctionField K2{0, {"s", "t"}};
  RationalFunctionField Kp{7, {"t"}};

  RatFun t() const { return K.parameter(0); }
  RatFun c(long v) const { return K.from_int(v); }
};

TEST_F(RatFunTest, Axioms) {
  std::mt19937_64 rng(5);
  auto random = [&](const RationalFunctionField& F) {
    auto poly = [&] {
      RatFun acc = F.zero();
      for (std::size_t v = 0; v < F.parameter_names().size(); ++v) {
        for (int k = 0; k < 3; ++k) {
          RatFun m = F.from_int(static_cast<long>(rng() % 7) - 3);
          for (int e = 0; e < k; ++e) m = F.mul(m, F.parameter(v));
          acc = F.add(acc, m);
        }
      }
      return acc;
    };
    RatFun den = poly();
    if (F.is_zero(den)) den = F.one();
    return F.div(poly(), den);
  };
  check_field_axioms(K, [&] { return random(K); }, 40);
  check_field_axioms(K2, [&] { return random(K2); }, 25);
  check_field_axioms(Kp, [&] { return random(Kp); }, 40);
}

TEST_F(RatFunTest, CanonicalForm) {
  // (t^2-1)/(t-1) == t+1
  RatFun num = K.sub(K.mul(t(), t()), c(1));
  RatFun q = K.div(num, K.sub(t(), c(1)));
  EXPECT_TRUE(K.equal(q, K.add(t(), c(1))));
  EXPECT_TRUE(q.den.is_one());
  // 2/(4t) == 1/(2t)
  RatFun a = K.div(c(2), K.mul(c(4), t()));
  RatFun b = K.inv(K.mul(c(2), t()));
  EXPECT_TRUE(K.equal(a, b));
  EXPECT_EQ(K.to_string(a), "1/(2*t)");
}

TEST_F(RatFunTest, MultivariateGcd) {
  const auto& R = K2.param_ring();
  auto s = R.variable(0), tt = R.variable(1);
  auto one = R.constant(1);
  auto f1 = R.mul(R.add(tt, one), R.pow(R.add(tt, R.constant(2)), 2));
  auto f = R.mul(f1, R.sub(s, one));
  auto g = R.mul(R.mul(R.add(tt, R.constant(2)), R.sub(s, one)), R.add(R.mul(s, tt), R.constant(3)));
  auto d = R.gcd(f, g);
  auto expected = R.mul(R.add(tt, R.constant(2)), R.sub(s, one));
  EXPECT_TRUE(d == R.normalize_unit(expected));
}

TEST_F(RatFunTest, PrimeCharacteristicReduces) {
  RatFun seven_t = Kp.mul(Kp.from_int(7), Kp.parameter(0));
  EXPECT_TRUE(Kp.is_zero(seven_t));
  EXPECT_THROW(Kp.inv(Kp.zero()), DivisionByZero);
}

TEST_F(RatFunTest, SpecializationIsARingHomomorphism) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    auto rnd = [&] {
      RatFun n = K.add(K.mul(c(static_cast<long>(rng() % 11) - 5), K.mul(t(), t())), c(static_cast<long>(rng() % 9) + 1));
      RatFun d = K.add(t(), c(static_cast<long>(rng() % 5) + 60));
      return K.div(n, d);
    };
    RatFun a = rnd(), b = rnd();
    SpecializationPoint pt{32003u, std::vector<std::int64_t>{static_cast<std::int64_t>(rng() % 101) - 50}, 0};
    PrimeField F(32003);
    auto sa = specialize_element(K, a, pt), sb = specialize_element(K, b, pt);
    EXPECT_EQ(specialize_element(K, K.add(a, b), pt), F.add(sa, sb));
    EXPECT_EQ(specialize_element(K, K.mul(a, b), pt), F.mul(sa, sb));
    EXPECT_EQ(specialize_element(K, K.neg(a), pt), F.neg(sa));
  }
}

TEST_F(RatFunTest, SpecializationFailsOnVanishingDenominator) {
  RatFun a = K.inv(K.sub(t(), c(1)));
  SpecializationPoint pt{32003u, std::vector<std::int64_t>{1}, 0};
  EXPECT_THROW(specialize_element(K, a, pt), SpecializationFailure);
  SpecializationPoint ok{32003u, std::vector<std::int64_t>{2}, 0};
  EXPECT_EQ(specialize_element(K, a, ok), 1u);
}

TEST(Rationals, SpecializationIsARingHomomorphism) {
  Rationals Q;
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {5u, 32003u, 2147483629u}) {
    PrimeField F(p);
    SpecializationPoint pt{p, std::nullopt, 0};
    for (int i = 0; i < 100; ++i) {
      mpq_class a(static_cast<long>(rng() % 1000) - 500, static_cast<long>(rng() % 4) * 2 + 1);
      mpq_class b(static_cast<long>(rng() % 1000) - 500, static_cast<long>(rng() % 4) * 2 + 1);
      a.canonicalize();
      b.canonicalize();
      if (p == 5 && (a.get_den() % 5 == 0 || b.get_den() % 5 == 0)) continue;
      EXPECT_EQ(specialize_element(Q, a * b, pt), F.mul(specialize_element(Q, a, pt), specialize_element(Q, b, pt)));
      EXPECT_EQ(specialize_element(Q, a + b, pt), F.add(specialize_element(Q, a, pt), specialize_element(Q, b, pt)));
    }
  }
}

TEST(DomainSpec, Validation) {
  EXPECT_NO_THROW((DomainSpec{0, {"t"}}.validate(std::vector<std::string>{"x", "y"})));
  EXPECT_THROW((DomainSpec{4, {}}.validate()), InvalidArgument);
  EXPECT_THROW((DomainSpec{0, {"t", "t"}}.validate()), InvalidArgument);
  EXPECT_THROW((DomainSpec{0, {"x"}}.validate(std::vector<std::string>{"x"})), InvalidArgument);
}

TEST(DomainSpec, ResidueDomain) {
  DomainSpec qt{0, {"t"}};
  EXPECT_EQ(residue_domain(qt, {32003u, std::vector<std::int64_t>{1}, 0}), (DomainSpec{32003, {}}));
  EXPECT_EQ(residue_domain(qt, {std::nullopt, std::vector<std::int64_t>{1}, 0}), (DomainSpec{0, {}}));
  EXPECT_THROW(residue_domain(qt, {std::nullopt, std::vector<std::int64_t>{1, 2}, 0}), InvalidArgument);
  EXPECT_THROW(residue_domain(DomainSpec{7, {"t"}}, {11u, std::vector<std::int64_t>{1}, 0}), InvalidArgument);
  EXPECT_THROW(residue_domain(qt, {9u, std::nullopt, 0}), InvalidArgument);
}
