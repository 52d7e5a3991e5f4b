#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hcstd/errors.hpp"

namespace hcstd {

inline constexpr std::size_t kMaxParameters = 8;

using ParamExponents = std::array<std::uint16_t, kMaxParameters>;

struct ParamTerm {
  ParamExponents exps{};
  mpz_class coeff;
};

/// Sparse polynomial in the parameters t_1..t_s with integer (char 0) or residue
/// (char p, stored in [0, p)) coefficients. Terms are sorted lexicographically
/// descending with t_1 > t_2 > ...; no zero coefficients.
struct ParamPoly {
  std::vector<ParamTerm> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  bool is_constant() const noexcept {
    return terms.empty() ||
           (terms.size() == 1 && std::all_of(terms[0].exps.begin(), terms[0].exps.end(),
                                             [](auto e) { return e == 0; }));
  }
  bool is_one() const { return is_constant() && !terms.empty() && terms[0].coeff == 1; }
  const mpz_class& leading_coeff() const { return terms.front().coeff; }

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
      if (a.terms[i].exps != b.terms[i].exps || a.terms[i].coeff != b.terms[i].coeff) return false;
    }
    return true;
  }
};

/// Arithmetic on ParamPoly for a fixed parameter count and characteristic, including
/// exact division and gcd (recursive content / primitive pseudo-remainder sequence).
class ParamRing {
 public:
  ParamRing(std::size_t nparams, std::uint32_t characteristic)
      : nparams_(nparams), char_(characteristic) {
    if (nparams > kMaxParameters) {
      throw InvalidArgument("at most " + std::to_string(kMaxParameters) + " parameters supported");
    }
  }

  std::size_t size() const noexcept { return nparams_; }
  std::uint32_t characteristic() const noexcept { return char_; }

  ParamPoly constant(mpz_class c) const {
    reduce(c);
    ParamPoly r;
    if (sgn(c) != 0) r.terms.push_back({ParamExponents{}, std::move(c)});
    return r;
  }

  ParamPoly variable(std::size_t i) const {
    ParamPoly r;
    ParamTerm t;
    t.exps[i] = 1;
    t.coeff = 1;
    r.terms.push_back(std::move(t));
    return r;
  }

  ParamPoly add(const ParamPoly& a, const ParamPoly& b) const { return combine(a, b, false); }
  ParamPoly sub(const ParamPoly& a, const ParamPoly& b) const { return combine(a, b, true); }

  ParamPoly neg(ParamPoly a) const {
    for (auto& t : a.terms) {
      t.coeff = -t.coeff;
      reduce(t.coeff);
    }
    return a;
  }

  ParamPoly scale(ParamPoly a, const mpz_class& c) const {
    if (sgn(c) == 0) return {};
    for (auto& t : a.terms) {
      t.coeff *= c;
      reduce(t.coeff);
    }
    std::erase_if(a.terms, [](const ParamTerm& t) { return sgn(t.coeff) == 0; });
    return a;
  }

  ParamPoly mul(const ParamPoly& a, const ParamPoly& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return scale(b, a.terms[0].coeff);
    if (b.is_constant()) return scale(a, b.terms[0].coeff);
    std::vector<ParamTerm> prod;
    prod.reserve(a.terms.size() * b.terms.size());
    for (const auto& x : a.terms) {
      for (const auto& y : b.terms) {
        ParamTerm t;
        for (std::size_t i = 0; i < nparams_; ++i) t.exps[i] = add_exp(x.exps[i], y.exps[i]);
        t.coeff = x.coeff * y.coeff;
        prod.push_back(std::move(t));
      }
    }
    return canonical(std::move(prod));
  }

  ParamPoly pow(const ParamPoly& a, unsigned e) const {
    ParamPoly r = constant(1);
    for (unsigned i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  /// a / b; throws InvalidArgument when b does not divide a exactly.
  ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b) const {
    if (b.is_zero()) throw DivisionByZero();
    if (b.is_constant()) {
      ParamPoly q = a;
      if (char_ == 0) {
        for (auto& t : q.terms) {
          if (!mpz_divisible_p(t.coeff.get_mpz_t(), b.terms[0].coeff.get_mpz_t())) {
            throw InvalidArgument("inexact parameter polynomial division");
          }
          mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), b.terms[0].coeff.get_mpz_t());
        }
        return q;
      }
      return scale(std::move(q), inverse(b.terms[0].coeff));
    }
    ParamPoly q, r = a;
    const ParamTerm& lead = b.terms.front();
    while (!r.is_zero()) {
      const ParamTerm& rt = r.terms.front();
      ParamTerm qt;
      for (std::size_t i = 0; i < nparams_; ++i) {
        if (rt.exps[i] < lead.exps[i]) throw InvalidArgument("inexact parameter polynomial division");
        qt.exps[i] = static_cast<std::uint16_t>(rt.exps[i] - lead.exps[i]);
      }
      if (char_ == 0) {
        if (!mpz_divisible_p(rt.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
          throw InvalidArgument("inexact parameter polynomial division");
        }
        qt.coeff = rt.coeff;
        mpz_divexact(qt.coeff.get_mpz_t(), qt.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
      } else {
        qt.coeff = rt.coeff * inverse(lead.coeff);
        reduce(qt.coeff);
      }
      ParamPoly step;
      step.terms.push_back(qt);
      r = sub(r, mul(step, b));
      q.terms.push_back(std::move(qt));
    }
    return q;
  }

  /// Normalized gcd: positive leading coefficient and full integer content in char 0,
  /// monic in char p. gcd(0, 0) = 0.
  ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) const {
    if (!a.is_constant() && !b.is_constant() && !a.is_zero() && !b.is_zero() && coprime_mod(a, b)) {
      return constant_gcd(a, b);
    }
    if (nparams_ == 1 && !a.is_zero() && !b.is_zero()) {
      if (char_ != 0) return univariate_gcd_mod(a, b);
      if (auto g = heuristic_gcd(a, b)) return *g;
    }
    return gcd_rec(a, b, static_cast<int>(nparams_) - 1);
  }

  /// Integer content (char 0) of a nonzero polynomial, sign-free.
  mpz_class integer_content(const ParamPoly& a) const {
    mpz_class g = 0;
    for (const auto& t : a.terms) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Multiplies by a unit so the leading coefficient is positive (char 0) or 1 (char p).
  ParamPoly normalize_unit(ParamPoly a) const {
    if (a.is_zero()) return a;
    if (char_ == 0) return sgn(a.leading_coeff()) < 0 ? neg(std::move(a)) : a;
    if (a.leading_coeff() == 1) return a;
    return scale(std::move(a), inverse(a.leading_coeff()));
  }

  /// Value at an integer point, reduced modulo p.
  std::uint32_t evaluate_mod(const ParamPoly& a, std::span<const std::int64_t> point,
                             std::uint32_t p) const {
    std::uint64_t acc = 0;
    for (const auto& t : a.terms) {
      std::uint64_t v = mpz_fdiv_ui(t.coeff.get_mpz_t(), p);
      for (std::size_t i = 0; i < nparams_; ++i) {
        std::int64_t base = point[i] % static_cast<std::int64_t>(p);
        std::uint64_t b = static_cast<std::uint64_t>(base < 0 ? base + p : base);
        for (unsigned e = 0; e < t.exps[i]; ++e) v = v * b % p;
      }
      acc = (acc + v) % p;
    }
    return static_cast<std::uint32_t>(acc);
  }

  /// Exact value at an integer point (char 0), or residue (char p).
  mpz_class evaluate(const ParamPoly& a, std::span<const std::int64_t> point) const {
    mpz_class acc = 0;
    for (const auto& t : a.terms) {
      mpz_class v = t.coeff;
      for (std::size_t i = 0; i < nparams_; ++i) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), mpz_class(static_cast<long>(point[i])).get_mpz_t(), t.exps[i]);
        v *= pw;
      }
      acc += v;
    }
    reduce(acc);
    return acc;
  }

  std::string to_string(const ParamPoly& a, std::span<const std::string> names) const {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : a.terms) {
      mpz_class c = t.coeff;
      bool negative = sgn(c) < 0;
      if (negative) c = -c;
      if (!first) out += negative ? "-" : "+";
      else if (negative) out += "-";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < nparams_; ++i) {
        if (t.exps[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
      }
      if (mono.empty()) out += c.get_str();
      else if (c == 1) out += mono;
      else out += c.get_str() + "*" + mono;
    }
    return out;
  }

  void reduce(mpz_class& c) const {
    if (char_ != 0) mpz_fdiv_r_ui(c.get_mpz_t(), c.get_mpz_t(), char_);
  }

  mpz_class inverse(const mpz_class& c) const {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), c.get_mpz_t(), mpz_class(char_).get_mpz_t()) == 0) {
      throw DivisionByZero();
    }
    return r;
  }

 private:
  static std::uint16_t add_exp(std::uint16_t a, std::uint16_t b) {
    unsigned s = static_cast<unsigned>(a) + b;
    if (s >= (1u << 15)) throw ExponentOverflow();
    return static_cast<std::uint16_t>(s);
  }

  // Lex descending: t_1 compared first.
  static bool lex_greater(const ParamExponents& a, const ParamExponents& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }

  ParamPoly canonical(std::vector<ParamTerm> terms) const {
    std::sort(terms.begin(), terms.end(),
              [](const ParamTerm& x, const ParamTerm& y) { return lex_greater(x.exps, y.exps); });
    ParamPoly r;
    for (auto& t : terms) {
      if (!r.terms.empty() && r.terms.back().exps == t.exps) {
        r.terms.back().coeff += t.coeff;
      } else {
        if (!r.terms.empty()) {
          reduce(r.terms.back().coeff);
          if (sgn(r.terms.back().coeff) == 0) r.terms.pop_back();
        }
        r.terms.push_back(std::move(t));
      }
    }
    if (!r.terms.empty()) {
      reduce(r.terms.back().coeff);
      if (sgn(r.terms.back().coeff) == 0) r.terms.pop_back();
    }
    return r;
  }

  ParamPoly combine(const ParamPoly& a, const ParamPoly& b, bool subtract) const {
    ParamPoly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
      if (j == b.terms.size() || (i < a.terms.size() && lex_greater(a.terms[i].exps, b.terms[j].exps))) {
        r.terms.push_back(a.terms[i++]);
      } else if (i == a.terms.size() || lex_greater(b.terms[j].exps, a.terms[i].exps)) {
        ParamTerm t = b.terms[j++];
        if (subtract) {
          t.coeff = -t.coeff;
          reduce(t.coeff);
        }
        r.terms.push_back(std::move(t));
      } else {
        mpz_class c = a.terms[i].coeff;
        if (subtract) c -= b.terms[j].coeff;
        else c += b.terms[j].coeff;
        reduce(c);
        if (sgn(c) != 0) r.terms.push_back({a.terms[i].exps, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  unsigned degree_in(const ParamPoly& a, int v) const {
    unsigned d = 0;
    for (const auto& t : a.terms) d = std::max<unsigned>(d, t.exps[v]);
    return d;
  }

  // Coefficient of t_v^k, as a polynomial free of t_v.
  ParamPoly coeff_in(const ParamPoly& a, int v, unsigned k) const {
    ParamPoly r;
    for (const auto& t : a.terms) {
      if (t.exps[v] == k) {
        ParamTerm c = t;
        c.exps[v] = 0;
        r.terms.push_back(std::move(c));
      }
    }
    return r;  // lex order is preserved after clearing one coordinate uniformly
  }

  ParamPoly shift(const ParamPoly& a, int v, unsigned k) const {
    ParamPoly r = a;
    for (auto& t : r.terms) t.exps[v] = add_exp(t.exps[v], static_cast<std::uint16_t>(k));
    return r;
  }

  ParamPoly constant_gcd(const ParamPoly& a, const ParamPoly& b) const {
    if (char_ != 0) return constant(1);
    mpz_class g = gcd(integer_content(a), integer_content(b));
    return constant(g);
  }

  static mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }

  // Univariate image in variable v modulo P, the other variables set to fixed values.
  std::vector<std::uint64_t> image(const ParamPoly& a, std::size_t v, std::uint64_t P) const {
    std::vector<std::uint64_t> out;
    for (const auto& t : a.terms) {
      std::uint64_t c = mpz_fdiv_ui(t.coeff.get_mpz_t(), P);
      for (std::size_t i = 0; i < nparams_; ++i) {
        if (i == v) continue;
        std::uint64_t base = (1000003u + 7919u * i) % P;
        for (unsigned e = 0; e < t.exps[i]; ++e) c = c * base % P;
      }
      if (out.size() <= t.exps[v]) out.resize(t.exps[v] + 1, 0);
      out[t.exps[v]] = (out[t.exps[v]] + c) % P;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  }

  static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t P) {
    std::uint64_t r = 1;
    for (b %= P; e; e >>= 1, b = b * b % P) {
      if (e & 1) r = r * b % P;
    }
    return r;
  }

  // Degree of gcd of two univariate polynomials over F_P (coefficients low to high).
  static std::size_t gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t P) {
    while (!b.empty()) {
      const std::uint64_t inv = pow_mod(b.back(), P - 2, P);
      while (a.size() >= b.size()) {
        const std::uint64_t q = a.back() * inv % P;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
          a[i + shift] = (a[i + shift] + P - q * b[i] % P) % P;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
      }
      std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
  }

  ParamPoly univariate_gcd_mod(const ParamPoly& a, const ParamPoly& b) const {
    const std::uint64_t P = char_;
    auto x = image(a, 0, P);
    auto y = image(b, 0, P);
    while (!y.empty()) {
      const std::uint64_t inv = pow_mod(y.back(), P - 2, P);
      while (x.size() >= y.size()) {
        const std::uint64_t q = x.back() * inv % P;
        const std::size_t sh = x.size() - y.size();
        for (std::size_t i = 0; i < y.size(); ++i) x[i + sh] = (x[i + sh] + P - q * y[i] % P) % P;
        while (!x.empty() && x.back() == 0) x.pop_back();
      }
      std::swap(x, y);
    }
    std::vector<ParamTerm> terms;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      ParamTerm t;
      t.exps[0] = static_cast<std::uint16_t>(i);
      t.coeff = mpz_class(static_cast<unsigned long>(x[i]));
      terms.push_back(std::move(t));
    }
    return normalize_unit(canonical(std::move(terms)));
  }

  // Heuristic gcd over Z[t]: evaluate at a large integer, take the integer gcd and read
  // the candidate back from its balanced xi-adic digits. Accepted only if it divides both.
  std::optional<ParamPoly> heuristic_gcd(const ParamPoly& a, const ParamPoly& b) const {
    const mpz_class ca = integer_content(a);
    const mpz_class cb = integer_content(b);
    const ParamPoly pa = exact_div(a, constant(ca));
    const ParamPoly pb = exact_div(b, constant(cb));
    auto height = [](const ParamPoly& f) {
      mpz_class h = 0;
      for (const auto& t : f.terms) {
        if (mpz_cmpabs(t.coeff.get_mpz_t(), h.get_mpz_t()) > 0) h = abs(t.coeff);
      }
      return h;
    };
    auto eval = [](const ParamPoly& f, const mpz_class& xi) {
      mpz_class acc = 0;
      unsigned e = f.terms.front().exps[0];
      for (const auto& t : f.terms) {
        while (e > t.exps[0]) {
          acc *= xi;
          --e;
        }
        acc += t.coeff;
      }
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), e);
      return mpz_class(acc * pw);
    };
    mpz_class xi = 2 * std::min(height(pa), height(pb)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
      mpz_class G = gcd(eval(pa, xi), eval(pb, xi));
      std::vector<ParamTerm> terms;
      const mpz_class half = xi / 2;
      for (std::uint16_t e = 0; sgn(G) != 0; ++e) {
        mpz_class c;
        mpz_fdiv_r(c.get_mpz_t(), G.get_mpz_t(), xi.get_mpz_t());
        if (c > half) c -= xi;
        G = (G - c) / xi;
        if (sgn(c) == 0) continue;
        ParamTerm t;
        t.exps[0] = e;
        t.coeff = c;
        terms.push_back(std::move(t));
      }
      if (!terms.empty()) {
        ParamPoly g = canonical(std::move(terms));
        g = normalize_unit(exact_div(g, constant(integer_content(g))));
        if (divides(g, pa) && divides(g, pb)) return scale(std::move(g), gcd(ca, cb));
      }
      xi = xi * 73794 / 27011;
    }
    return std::nullopt;
  }

  bool divides(const ParamPoly& d, const ParamPoly& f) const {
    try {
      exact_div(f, d);
      return true;
    } catch (const InvalidArgument&) {
      return false;
    }
  }

  // True when the images prove that the gcd has degree 0 in every variable: an image
  // whose leading coefficient survives bounds the degree of the gcd from above.
  bool coprime_mod(const ParamPoly& a, const ParamPoly& b) const {
    const std::uint64_t P = char_ != 0 ? char_ : 2147483647u;
    for (std::size_t v = 0; v < nparams_; ++v) {
      const unsigned da = degree_in(a, static_cast<int>(v));
      const unsigned db = degree_in(b, static_cast<int>(v));
      if (da == 0 || db == 0) continue;
      auto ia = image(a, v, P);
      auto ib = image(b, v, P);
      if (ia.size() != da + 1 || ib.size() != db + 1) return false;
      if (gcd_degree_mod(std::move(ia), std::move(ib), P) != 0) return false;
    }
    return true;
  }

  ParamPoly content_rec(const ParamPoly& a, int v) const {
    ParamPoly c;
    for (unsigned k = degree_in(a, v) + 1; k-- > 0;) {
      ParamPoly coeff = coeff_in(a, v, k);
      if (coeff.is_zero()) continue;
      c = c.is_zero() ? normalize_unit(std::move(coeff)) : gcd_rec(c, coeff, v - 1);
      if (c.is_one()) break;
    }
    return c;
  }

  ParamPoly prem(ParamPoly r, const ParamPoly& b, int v) const {
    unsigned n = degree_in(b, v);
    ParamPoly lcb = coeff_in(b, v, n);
    while (!r.is_zero()) {
      unsigned k = degree_in(r, v);
      if (k < n) break;
      ParamPoly lcr = coeff_in(r, v, k);
      r = sub(mul(lcb, r), mul(lcr, shift(b, v, k - n)));
    }
    return r;
  }

  ParamPoly gcd_rec(const ParamPoly& a, const ParamPoly& b, int v) const {
    if (a.is_zero()) return normalize_unit(b);
    if (b.is_zero()) return normalize_unit(a);
    if (v < 0 || a.is_constant() || b.is_constant()) return constant_gcd(a, b);
    if (a == b) {
      ParamPoly r = normalize_unit(a);
      return r;
    }
    ParamPoly ca = content_rec(a, v);
    ParamPoly cb = content_rec(b, v);
    ParamPoly c = gcd_rec(ca, cb, v - 1);
    ParamPoly pa = exact_div(a, ca);
    ParamPoly pb = exact_div(b, cb);
    if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);
    if (degree_in(pb, v) == 0) return c;
    while (!pb.is_zero()) {
      if (degree_in(pb, v) == 0) return c;
      ParamPoly r = prem(pa, pb, v);
      pa = std::move(pb);
      pb = r.is_zero() ? std::move(r) : exact_div(r, content_rec(r, v));
    }
    return normalize_unit(mul(c, pa));
  }

  std::size_t nparams_;
  std::uint32_t char_;
};

}  // namespace hcstd
