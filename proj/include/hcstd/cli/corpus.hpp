#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hcstd/errors.hpp"

namespace hcstd::cli {

inline constexpr int kExampleCount = 8;

namespace detail {

// Exponent vectors of all monomials of the given degree in n variables.
inline void degree_monomials(std::size_t n, unsigned degree, std::vector<std::vector<unsigned>>& out) {
  std::vector<unsigned> e(n, 0);
  auto rec = [&](auto& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == n) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, degree);
}

inline std::string monomial_text(const std::vector<unsigned>& e, const char* names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

// Five random combinations of every monomial of the listed degrees in x,y,z,w with
// nonzero integer coefficients in [-99,99]; degrees in `t_degrees` carry a factor t.
inline std::string random_ideal(std::uint64_t seed, const std::vector<unsigned>& degrees,
                                const std::vector<unsigned>& t_degrees) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<unsigned>> plain, with_t;
  for (unsigned d : degrees) degree_monomials(4, d, plain);
  for (unsigned d : t_degrees) degree_monomials(4, d, with_t);
  std::string out;
  for (int g = 0; g < 5; ++g) {
    if (g) out += ",\n  ";
    bool first = true;
    auto emit = [&](const std::vector<unsigned>& e, bool t) {
      const auto k = static_cast<int>(rng() % 198);
      const int c = k < 99 ? k - 99 : k - 98;
      out += c < 0 ? "-" : (first ? "" : "+");
      out += std::to_string(c < 0 ? -c : c) + (t ? "*t*" : "*") + monomial_text(e, "xyzw");
      first = false;
    };
    for (const auto& e : plain) emit(e, false);
    for (const auto& e : with_t) emit(e, true);
  }
  return out;
}

}  // namespace detail

/// Session text of built-in example n (1..8). Every session defines the ideal I;
/// examples 4 and 8 are drawn from the seeded generator.
inline std::string example_session(int n, std::uint64_t seed = 100) {
  const std::string q3 = "ring R = 0,(x,y,z),ds;\n";
  const std::string qt3 = "ring R = (0,t),(x,y,z),ds;\n";
  switch (n) {
    case 1:
      return q3 + "poly F = x3y3+x5y2+2x2y5+x2y2z3+xy7+z9+y13+x25;\nideal I = jacob(F),F;\n";
    case 2:
      return q3 + "poly F = xyz*(x+y+z)^2+(x+y+z)^3+x15+y15+z15;\nideal I = jacob(F);\n";
    case 3:
      return q3 + "poly F = x8y6+x10y5+x8y7+2x7y8+x7y6z2+x16+x6y10+y18+z20;\nideal I = jacob(F);\n";
    case 4:
      return "ring R = 0,(x,y,z,w),ds;\nideal I =\n  " + detail::random_ideal(seed, {5, 7, 10}, {}) + ";\n";
    case 5:
      return qt3 + "poly F = y10+(t2)*x7y7+x15+x9y6+(2t)*x6y9+x6y6z3+x5y11+z21;\nideal I = jacob(F);\n";
    case 6:
      return qt3 + "poly F = xyz*(x+y+z)^2+(x+y+z)^3+t*(x15+y15+z15);\nideal I = jacob(F);\n";
    case 7:
      return qt3 + "poly F = x8y6+x10y5+x8y7+2x7y8+x7y6z2+x16+x6y10+t*y18+t^2*z20;\nideal I = jacob(F);\n";
    case 8:
      return "ring R = (0,t),(x,y,z,w),ds;\nideal I =\n  " + detail::random_ideal(seed, {5, 7}, {9}) + ";\n";
    default:
      throw InvalidArgument("unknown example " + std::to_string(n) + " (expected 1.." +
                            std::to_string(kExampleCount) + ")");
  }
}

}  // namespace hcstd::cli
