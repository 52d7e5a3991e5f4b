#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "hcstd/coeff/prime_field.hpp"
#include "hcstd/coeff/rational_function.hpp"
#include "hcstd/coeff/rationals.hpp"
#include "hcstd/errors.hpp"

namespace hcstd {

/// Coefficient domain: characteristic (0 or a prime below 2^31) and parameter names.
/// No parameters gives Q or F_p, otherwise Q(t) or F_p(t).
struct DomainSpec {
  std::uint32_t characteristic = 0;
  std::vector<std::string> parameters;

  bool has_parameters() const noexcept { return !parameters.empty(); }

  /// Throws InvalidArgument on a bad characteristic, repeated parameter names, or
  /// parameter names clashing with the given ring variables.
  void validate(std::span<const std::string> variables = {}) const {
    if (characteristic != 0 && (characteristic >= (1u << 31) || !is_prime_u32(characteristic))) {
      throw InvalidArgument("characteristic " + std::to_string(characteristic) +
                            " is neither 0 nor a prime below 2^31");
    }
    std::set<std::string> seen;
    for (const auto& p : parameters) {
      if (!seen.insert(p).second) throw InvalidArgument("duplicate parameter name '" + p + "'");
    }
    for (const auto& v : variables) {
      if (seen.count(v)) throw InvalidArgument("name '" + v + "' is both a parameter and a variable");
    }
    if (parameters.size() > kMaxParameters) throw InvalidArgument("too many parameters");
  }

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

/// A maximal ideal of A used for specialization: a prime, a parameter point, or both.
struct SpecializationPoint {
  std::optional<std::uint32_t> prime;
  std::optional<std::vector<std::int64_t>> point;
  std::size_t attempt = 0;

  friend bool operator==(const SpecializationPoint& a, const SpecializationPoint& b) {
    return a.prime == b.prime && a.point == b.point;
  }
};

/// Residue domain k(p) of a specialization.
inline DomainSpec residue_domain(const DomainSpec& d, const SpecializationPoint& pt) {
  if (d.has_parameters() && pt.point && pt.point->size() != d.parameters.size()) {
    throw InvalidArgument("specialization point has " + std::to_string(pt.point->size()) +
                          " coordinates, expected " + std::to_string(d.parameters.size()));
  }
  if (pt.prime && !is_prime_u32(*pt.prime)) {
    throw InvalidArgument(std::to_string(*pt.prime) + " is not prime");
  }
  DomainSpec r;
  if (d.characteristic != 0) {
    if (pt.prime && *pt.prime != d.characteristic) {
      throw InvalidArgument("cannot reduce characteristic " + std::to_string(d.characteristic) +
                            " modulo " + std::to_string(*pt.prime));
    }
    r.characteristic = d.characteristic;
  } else {
    r.characteristic = pt.prime.value_or(0);
  }
  if (d.has_parameters() && !pt.point) r.parameters = d.parameters;
  return r;
}

/// Residue in F_p of an element of A = Z.
inline std::uint32_t specialize_element(const Rationals&, const mpq_class& v,
                                        const SpecializationPoint& pt) {
  if (!pt.prime) throw InvalidArgument("specialization of Q requires a prime");
  return PrimeField(*pt.prime).from_mpq(v);
}

/// Residue in F_p of an element of Z[t] or F_p[t] (prime and point both applied).
inline std::uint32_t specialize_element(const RationalFunctionField& field, const RatFun& v,
                                        const SpecializationPoint& pt) {
  std::uint32_t p = field.characteristic() != 0 ? field.characteristic() : pt.prime.value_or(0);
  if (p == 0) throw InvalidArgument("specialization into a prime field requires a prime");
  if (!pt.point || pt.point->size() != field.parameter_names().size()) {
    throw InvalidArgument("specialization point does not match the parameter count");
  }
  const auto& ring = field.param_ring();
  std::uint32_t den = ring.evaluate_mod(v.den, *pt.point, p);
  if (den == 0) throw SpecializationFailure("denominator vanishes at the specialization point");
  PrimeField fp(p);
  return fp.div(ring.evaluate_mod(v.num, *pt.point, p), den);
}

inline std::uint32_t specialize_element(const PrimeField&, std::uint32_t v,
                                        const SpecializationPoint&) {
  return v;
}

/// A field element tagged with its domain. Arithmetic checks that both operands share
/// a domain; the polynomial engine uses unboxed elements of the concrete field types.
class Scalar {
 public:
  using Value = std::variant<mpq_class, std::uint32_t, RatFun>;

  Scalar(std::shared_ptr<const DomainSpec> domain, Value value)
      : domain_(std::move(domain)), value_(std::move(value)) {
    check_kind();
  }

  static Scalar rational(std::shared_ptr<const DomainSpec> d, const mpq_class& q) {
    return from_mpq(std::move(d), q);
  }

  /// Embeds an integer or rational constant into any domain.
  static Scalar from_mpq(std::shared_ptr<const DomainSpec> d, const mpq_class& q) {
    if (d->has_parameters()) {
      RationalFunctionField f(d->characteristic, d->parameters);
      return Scalar(d, f.from_mpq(q));
    }
    if (d->characteristic != 0) return Scalar(d, PrimeField(d->characteristic).from_mpq(q));
    mpq_class c = q;
    c.canonicalize();
    return Scalar(std::move(d), c);
  }

  const DomainSpec& domain() const noexcept { return *domain_; }
  const std::shared_ptr<const DomainSpec>& domain_ptr() const noexcept { return domain_; }
  const Value& value() const noexcept { return value_; }

  bool is_zero() const {
    return std::visit(
        [](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, mpq_class>) return sgn(v) == 0;
          else if constexpr (std::is_same_v<T, std::uint32_t>) return v == 0;
          else return v.num.is_zero();
        },
        value_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return apply(a, b, '+'); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return apply(a, b, '-'); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return apply(a, b, '*'); }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return apply(a, b, '/'); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return *a.domain_ == *b.domain_ && a.value_ == b.value_;
  }

  std::string to_string() const {
    return std::visit(
        [this](const auto& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, mpq_class>) return v.get_str();
          else if constexpr (std::is_same_v<T, std::uint32_t>) return std::to_string(v);
          else return RationalFunctionField(domain_->characteristic, domain_->parameters).to_string(v);
        },
        value_);
  }

 private:
  void check_kind() const {
    std::size_t expected = domain_->has_parameters() ? 2 : (domain_->characteristic != 0 ? 1 : 0);
    if (value_.index() != expected) throw DomainMismatch("scalar value does not match its domain");
  }

  template <class Field, class E>
  static E op(const Field& f, const E& x, const E& y, char c) {
    switch (c) {
      case '+': return f.add(x, y);
      case '-': return f.sub(x, y);
      case '*': return f.mul(x, y);
      default: return f.div(x, y);
    }
  }

  static Scalar apply(const Scalar& a, const Scalar& b, char c) {
    if (!(*a.domain_ == *b.domain_)) throw DomainMismatch("operands belong to different domains");
    const DomainSpec& d = *a.domain_;
    if (d.has_parameters()) {
      RationalFunctionField f(d.characteristic, d.parameters);
      return Scalar(a.domain_, op(f, std::get<RatFun>(a.value_), std::get<RatFun>(b.value_), c));
    }
    if (d.characteristic != 0) {
      PrimeField f(d.characteristic);
      return Scalar(a.domain_, op(f, std::get<std::uint32_t>(a.value_), std::get<std::uint32_t>(b.value_), c));
    }
    return Scalar(a.domain_, op(Rationals{}, std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_), c));
  }

  std::shared_ptr<const DomainSpec> domain_;
  Value value_;
};

/// Image of s under A -> k(p). Throws SpecializationFailure when a denominator vanishes.
inline Scalar specialize_scalar(const Scalar& s, const SpecializationPoint& pt) {
  const DomainSpec& d = s.domain();
  auto target = std::make_shared<const DomainSpec>(residue_domain(d, pt));
  if (!d.has_parameters()) {
    if (d.characteristic != 0) return Scalar(target, s.value());
    if (!pt.prime) return Scalar(target, s.value());
    return Scalar(target, PrimeField(*pt.prime).from_mpq(std::get<mpq_class>(s.value())));
  }
  const RatFun& v = std::get<RatFun>(s.value());
  RationalFunctionField field(d.characteristic, d.parameters);
  if (!pt.point) {
    // reduce coefficients mod p, keep the parameters
    RationalFunctionField target_field(target->characteristic, d.parameters);
    auto reduce = [&](const ParamPoly& poly) {
      ParamPoly out;
      for (const auto& t : poly.terms) {
        mpz_class c = t.coeff;
        target_field.param_ring().reduce(c);
        if (sgn(c) != 0) out.terms.push_back({t.exps, c});
      }
      return out;
    };
    ParamPoly den = reduce(v.den);
    if (den.is_zero()) throw SpecializationFailure("denominator vanishes modulo the prime");
    return Scalar(target, target_field.make(reduce(v.num), std::move(den)));
  }
  if (target->characteristic != 0) return Scalar(target, specialize_element(field, v, pt));
  mpz_class den = field.param_ring().evaluate(v.den, *pt.point);
  if (sgn(den) == 0) throw SpecializationFailure("denominator vanishes at the specialization point");
  mpq_class q(field.param_ring().evaluate(v.num, *pt.point), den);
  q.canonicalize();
  return Scalar(target, q);
}

}  // namespace hcstd
