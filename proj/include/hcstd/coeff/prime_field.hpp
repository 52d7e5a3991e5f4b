#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "hcstd/errors.hpp"

namespace hcstd {

/// Deterministic Miller-Rabin, exact for every 32-bit input.
constexpr bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % p == 0) return n == p;
  }
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) { return (a * b) % n; };
  for (std::uint64_t a : {2u, 7u, 61u}) {
    if (a % n == 0) continue;
    std::uint64_t x = 1, base = a;
    for (std::uint32_t e = d; e; e >>= 1) {
      if (e & 1u) x = mulmod(x, base);
      base = mulmod(base, base);
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// The prime field F_p, p < 2^31. Elements are residues in [0, p) held in one word.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime_u32(p)) {
      throw InvalidArgument("characteristic " + std::to_string(p) + " is not a prime below 2^31");
    }
  }

  std::uint32_t characteristic() const noexcept { return p_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool is_one(Element a) const noexcept { return a == 1; }
  bool equal(Element a, Element b) const noexcept { return a == b; }

  Element from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }

  Element from_mpz(const mpz_class& v) const {
    return static_cast<Element>(mpz_fdiv_ui(v.get_mpz_t(), p_));
  }

  /// Image of a rational number; throws SpecializationFailure when p divides the denominator.
  Element from_mpq(const mpq_class& v) const {
    Element den = from_mpz(v.get_den());
    if (den == 0) throw SpecializationFailure("denominator vanishes modulo " + std::to_string(p_));
    return mul(from_mpz(v.get_num()), inv(den));
  }

  Element add(Element a, Element b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }

  Element inv(Element a) const {
    if (a == 0) throw DivisionByZero();
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return static_cast<Element>(t < 0 ? t + p_ : t);
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// Factors (u, v) with u*a == v*b, used to cancel leading terms: u*f - v*m*g.
  std::pair<Element, Element> cancel_factors(Element a, Element b) const {
    return {one(), div(a, b)};
  }

  /// Scales a coefficient vector by a unit to a canonical representative (monic here).
  void make_primitive(std::span<Element> coeffs) const {
    if (coeffs.empty() || coeffs.front() == 1) return;
    Element s = inv(coeffs.front());
    for (auto& c : coeffs) c = mul(c, s);
  }

  std::string to_string(Element a) const { return std::to_string(a); }
  bool is_negative(Element) const noexcept { return false; }
  bool needs_parentheses(Element) const noexcept { return false; }

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace hcstd
