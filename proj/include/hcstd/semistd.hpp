#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "hcstd/basis.hpp"
#include "hcstd/coeff/domain.hpp"
#include "hcstd/coeff/prime_field.hpp"
#include "hcstd/coeff/rational_function.hpp"
#include "hcstd/coeff/rationals.hpp"
#include "hcstd/corner.hpp"
#include "hcstd/errors.hpp"
#include "hcstd/mora.hpp"
#include "hcstd/ring/ideal.hpp"

namespace hcstd {

inline constexpr std::array<std::uint32_t, 6> kSpecializationPrimes = {32003, 320039, 1000003, 2147483629, 7, 65537};

namespace detail {

inline std::uint32_t random_prime(std::mt19937_64& rng) {
  std::uint32_t p = static_cast<std::uint32_t>((1u << 30) + rng() % (1u << 30));
  while (!is_prime_u32(p)) --p;
  return p;
}

inline std::vector<std::int64_t> random_point(std::mt19937_64& rng, std::size_t s) {
  std::vector<std::int64_t> v(s);
  for (auto& x : v) x = static_cast<std::int64_t>(rng() % 101) - 50;
  return v;
}

// k-th raw candidate, before duplicates are skipped.
inline SpecializationPoint candidate(const DomainSpec& domain, std::size_t k, std::mt19937_64& rng) {
  SpecializationPoint pt;
  if (domain.characteristic == 0) {
    pt.prime = k < kSpecializationPrimes.size() ? kSpecializationPrimes[k] : random_prime(rng);
  }
  if (domain.has_parameters()) {
    pt.point = k == 0 ? std::vector<std::int64_t>(domain.parameters.size(), 1)
                      : random_point(rng, domain.parameters.size());
  }
  return pt;
}

}  // namespace detail

/// Deterministic point for the given attempt. Attempt 0 is the override when given,
/// otherwise 32003 and/or the all-ones point; later attempts walk the fixed prime
/// list, then seeded random primes, with random points in [-50,50]^s. A point is
/// never repeated.
inline SpecializationPoint choose_specialization(const DomainSpec& domain, std::size_t attempt, std::uint64_t seed,
                                                 const std::optional<SpecializationPoint>& user_override = {},
                                                 std::size_t max_retries = 5) {
  if (attempt > max_retries) throw ExhaustedRetries("no specialization points left after " +
                                                    std::to_string(max_retries) + " retries");
  if (domain.characteristic != 0 && !domain.has_parameters()) {
    throw InvalidArgument("a prime field needs no specialization");
  }
  std::mt19937_64 rng(seed);
  std::vector<SpecializationPoint> seq;
  if (user_override) {
    SpecializationPoint o = *user_override;
    SpecializationPoint fill = detail::candidate(domain, 0, rng);
    if (!o.prime) o.prime = fill.prime;
    if (!o.point) o.point = fill.point;
    residue_domain(domain, o);
    seq.push_back(std::move(o));
    rng.seed(seed);
  }
  for (std::size_t k = 0; seq.size() <= attempt; ++k) {
    SpecializationPoint c = detail::candidate(domain, k, rng);
    if (std::find(seq.begin(), seq.end(), c) == seq.end()) seq.push_back(std::move(c));
  }
  SpecializationPoint out = seq[attempt];
  out.attempt = attempt;
  return out;
}

/// Image of the ideal in F_p[x] under the specialization. Generators must have
/// coefficients in A (see clear_denominators); zero images are dropped.
template <class Field>
IdealPresentation<PrimeField> specialize_ideal(const IdealPresentation<Field>& ideal, const SpecializationPoint& pt) {
  std::uint32_t p = 0;
  if constexpr (std::is_same_v<Field, PrimeField>) {
    p = ideal.ring->field().characteristic();
  } else if constexpr (std::is_same_v<Field, RationalFunctionField>) {
    p = ideal.ring->field().characteristic() != 0 ? ideal.ring->field().characteristic() : pt.prime.value_or(0);
  } else {
    p = pt.prime.value_or(0);
  }
  if (p == 0) throw InvalidArgument("specialization needs a prime");
  auto ring = std::make_shared<const PolyRing<PrimeField>>(PrimeField(p), ideal.ring->order());
  std::vector<Polynomial<std::uint32_t>> gens;
  for (const auto& g : ideal.generators) {
    std::vector<Term<std::uint32_t>> terms;
    for (const auto& t : g.terms()) {
      std::uint32_t c = specialize_element(ideal.ring->field(), t.coeff, pt);
      if (c != 0) terms.push_back({c, t.mono});
    }
    gens.push_back(Polynomial<std::uint32_t>::from_canonical(std::move(terms)));
  }
  return {ring, std::move(gens)};
}

struct AttemptRecord {
  enum class Outcome { accepted, rejected, specialization_failed, infinite };
  SpecializationPoint point;
  Outcome outcome = Outcome::rejected;
  std::optional<std::uint64_t> dp;
  std::optional<std::uint64_t> d0;
};

inline std::string to_string(AttemptRecord::Outcome o) {
  switch (o) {
    case AttemptRecord::Outcome::accepted: return "accepted";
    case AttemptRecord::Outcome::rejected: return "rejected";
    case AttemptRecord::Outcome::specialization_failed: return "specialization_failed";
    case AttemptRecord::Outcome::infinite: return "infinite";
  }
  return "";
}

struct PhaseTimings {
  double probe_ms = 0;
  double bound_ms = 0;
  double main_ms = 0;
  double verify_ms = 0;
};

template <class Field>
struct AlgorithmReport {
  StandardBasis<Field> basis;
  std::optional<std::uint64_t> d0;
  std::optional<std::uint64_t> dp;
  std::vector<AttemptRecord> attempts;
  HighestCorner hc;
  TruncationBound bound = NoBound{};
  bool fallback = false;
  PhaseTimings timings;

  std::size_t retries() const {
    return attempts.empty() ? 0 : attempts.size() - 1;
  }
};

struct HcStdConfig {
  std::uint64_t seed = 100;
  std::size_t max_retries = 5;
  std::optional<SpecializationPoint> user_override;
  /// When false the truncated phase runs with no bound (the untruncated reference).
  bool truncate = true;
  StdOptions std_options;
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline DomainSpec domain_of(const Rationals&) { return {}; }
inline DomainSpec domain_of(const PrimeField& f) { return {f.characteristic(), {}}; }
inline DomainSpec domain_of(const RationalFunctionField& f) { return {f.characteristic(), f.parameter_names()}; }

}  // namespace detail

/// Standard basis of a zero-dimensional ideal over K via a modular probe: the highest
/// corner at a specialization bounds the computation over K, and the result is
/// accepted when the vector space dimensions over K and over the residue field agree.
template <class Field>
AlgorithmReport<Field> hc_std(const IdealPresentation<Field>& ideal, const HcStdConfig& config = {}) {
  AlgorithmReport<Field> report;
  detail::Stopwatch clock;
  const OrderSpec& order = ideal.ring->order();
  IdealPresentation<Field> S = clear_denominators(ideal);

  auto finish_direct = [&](bool fallback) {
    StandardBasis<Field> g = standard_basis(S, NoBound{}, config.std_options);
    Staircase st = leading_ideal(g);
    if (!is_zero_dimensional(st)) throw NotZeroDimensional("the ideal is not zero-dimensional");
    report.timings.main_ms += clock.lap();
    report.basis = std::move(g);
    report.d0 = vdim(st);
    report.hc = highest_corner(st);
    report.bound = NoBound{};
    report.fallback = fallback;
    report.timings.verify_ms += clock.lap();
    return report;
  };

  if constexpr (std::is_same_v<Field, PrimeField>) {
    auto r = finish_direct(false);
    r.dp = r.d0;
    return r;
  } else {
    const DomainSpec domain = detail::domain_of(ideal.ring->field());
    for (std::size_t attempt = 0; attempt <= config.max_retries; ++attempt) {
      AttemptRecord rec;
      rec.point = choose_specialization(domain, attempt, config.seed, config.user_override, config.max_retries);
      std::optional<IdealPresentation<PrimeField>> Sp;
      try {
        Sp = specialize_ideal(S, rec.point);
      } catch (const SpecializationFailure&) {
        rec.outcome = AttemptRecord::Outcome::specialization_failed;
        report.attempts.push_back(std::move(rec));
        continue;
      }
      StdOptions probe_opts = config.std_options;
      probe_opts.reduce = false;
      probe_opts.dynamic_corner = true;
      StandardBasis<PrimeField> gp = standard_basis(*Sp, NoBound{}, probe_opts);
      Staircase stp = leading_ideal(gp);
      rec.dp = vdim(stp);
      report.dp = rec.dp;
      report.timings.probe_ms += clock.lap();
      if (!rec.dp) {
        rec.outcome = AttemptRecord::Outcome::infinite;
        report.attempts.push_back(std::move(rec));
        continue;
      }

      HighestCorner hc = highest_corner(stp);
      TruncationBound bound = config.truncate ? truncation_bound(hc, order, stp) : TruncationBound{NoBound{}};
      report.timings.bound_ms += clock.lap();

      StandardBasis<Field> g = standard_basis(S, bound, config.std_options);
      report.timings.main_ms += clock.lap();

      rec.d0 = vdim(leading_ideal(g));
      report.d0 = rec.d0;
      report.timings.verify_ms += clock.lap();
      if (rec.d0 == rec.dp) {
        rec.outcome = AttemptRecord::Outcome::accepted;
        report.attempts.push_back(std::move(rec));
        report.basis = std::move(g);
        report.hc = hc;
        report.bound = bound;
        return report;
      }
      rec.outcome = AttemptRecord::Outcome::rejected;
      report.attempts.push_back(std::move(rec));
    }
    return finish_direct(true);
  }
}

/// Milnor number: vdim of the local algebra of the Jacobian ideal.
template <class Field>
std::uint64_t milnor(std::shared_ptr<const PolyRing<Field>> ring, const Polynomial<typename Field::Element>& f,
                     const HcStdConfig& config = {}) {
  return *hc_std(jacobian_ideal(std::move(ring), f, false), config).d0;
}

/// Tjurina number: vdim of the local algebra of the Jacobian ideal plus F.
template <class Field>
std::uint64_t tjurina(std::shared_ptr<const PolyRing<Field>> ring, const Polynomial<typename Field::Element>& f,
                      const HcStdConfig& config = {}) {
  return *hc_std(jacobian_ideal(std::move(ring), f, true), config).d0;
}

}  // namespace hcstd
