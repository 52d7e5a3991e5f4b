#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hcstd/errors.hpp"

namespace hcstd {

inline constexpr std::size_t kMaxVariables = 16;
inline constexpr unsigned kMaxExponent = (1u << 15) - 1;

/// Power product x^a for a ring with at most kMaxVariables variables.
/// Caches its total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(check_size(nvars))) {}

  Monomial(std::initializer_list<unsigned> exps) : Monomial(std::vector<unsigned>(exps)) {}

  explicit Monomial(const std::vector<unsigned>& exps)
      : nvars_(static_cast<std::uint8_t>(check_size(exps.size()))) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned e = 1) {
    Monomial m(nvars);
    m.set(i, e);
    return m;
  }

  std::size_t size() const noexcept { return nvars_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (e > kMaxExponent) throw ExponentOverflow();
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<std::uint16_t>(e);
  }

  bool divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  /// Product; throws ExponentOverflow past 2^15 - 1.
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      unsigned e = static_cast<unsigned>(a.exps_[i]) + b.exps_[i];
      if (e > kMaxExponent) throw ExponentOverflow();
      r.exps_[i] = static_cast<std::uint16_t>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// a / b, requires b | a.
  friend Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
    }
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  /// Bitmask with one bit per (variable, exponent threshold); a | b implies
  /// (mask(a) & ~mask(b)) == 0.
  std::uint64_t divisibility_mask() const noexcept {
    if (nvars_ == 0) return 0;
    const unsigned bits = 64 / nvars_;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      unsigned e = std::min<unsigned>(exps_[i], bits);
      if (e) mask |= ((e == 64 ? ~0ull : ((1ull << e) - 1)) << (i * bits));
    }
    return mask;
  }

  std::vector<unsigned> exponents() const { return {exps_.begin(), exps_.begin() + nvars_}; }

 private:
  static std::size_t check_size(std::size_t n) {
    if (n > kMaxVariables) {
      throw InvalidArgument("at most " + std::to_string(kMaxVariables) + " variables supported");
    }
    return n;
  }
  static void check_same(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) throw DomainMismatch("monomials of different lengths");
  }

  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

enum class OrderKind { ds, Ds, ws };

/// Local monomial ordering on x_1 > ... > x_n.
///  ds: lower total degree is larger, ties by negative reverse lex
///      (x^a > x^b iff the last nonzero entry of a - b is negative).
///  Ds: lower total degree is larger, ties lexicographic.
///  ws: lower weighted degree is larger, ties as ds.
class OrderSpec {
 public:
  OrderSpec() = default;

  OrderSpec(OrderKind kind, std::vector<std::string> variables, std::vector<unsigned> weights = {})
      : kind_(kind), variables_(std::move(variables)), weights_(std::move(weights)) {
    if (variables_.size() > kMaxVariables) {
      throw InvalidArgument("at most " + std::to_string(kMaxVariables) + " variables supported");
    }
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (std::find(variables_.begin(), variables_.begin() + i, variables_[i]) != variables_.begin() + i) {
        throw InvalidArgument("duplicate variable name '" + variables_[i] + "'");
      }
    }
    if (kind_ == OrderKind::ws) {
      if (weights_.size() != variables_.size()) {
        throw InvalidArgument("ws needs one weight per variable");
      }
      if (std::any_of(weights_.begin(), weights_.end(), [](unsigned w) { return w == 0; })) {
        throw InvalidArgument("ws weights must be positive");
      }
    } else {
      weights_.assign(variables_.size(), 1);
    }
  }

  OrderKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<unsigned>& weights() const noexcept { return weights_; }

  std::uint64_t weighted_degree(const Monomial& m) const noexcept {
    if (kind_ != OrderKind::ws) return m.degree();
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<std::uint64_t>(weights_[i]) * m[i];
    return d;
  }

  /// Total order; throws DomainMismatch on length mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size() || a.size() != variables_.size()) {
      throw DomainMismatch("monomial length does not match the ordering");
    }
    return compare_unchecked(a, b);
  }

  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const noexcept {
    const std::size_t n = a.size();
    if (kind_ == OrderKind::ws) {
      auto wa = weighted_degree(a), wb = weighted_degree(b);
      if (wa != wb) return wb <=> wa;
    } else if (a.degree() != b.degree()) {
      return b.degree() <=> a.degree();
    }
    if (kind_ == OrderKind::Ds) {
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    }
    for (std::size_t i = n; i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const noexcept {
    return compare_unchecked(a, b) == std::strong_ordering::greater;
  }
  bool less(const Monomial& a, const Monomial& b) const noexcept {
    return compare_unchecked(a, b) == std::strong_ordering::less;
  }

  /// True when terms sorted by this ordering are sorted by ascending total degree.
  bool degree_compatible() const noexcept { return kind_ != OrderKind::ws; }

  /// The order-smallest variable (x_n for ds/Ds; for ws the heaviest, ties to the last).
  std::size_t smallest_variable() const noexcept {
    std::size_t best = 0;
    for (std::size_t i = 1; i < variables_.size(); ++i) {
      if (less(Monomial::variable(size(), i), Monomial::variable(size(), best))) best = i;
    }
    return best;
  }

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

 private:
  OrderKind kind_ = OrderKind::ds;
  std::vector<std::string> variables_;
  std::vector<unsigned> weights_;
};

inline std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::ds: return "ds";
    case OrderKind::Ds: return "Ds";
    default: return "ws";
  }
}

}  // namespace hcstd
