#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hcstd/cli/corpus.hpp"
#include "hcstd/cli/report.hpp"
#include "hcstd/cli/session.hpp"
#include "hcstd/errors.hpp"
#include "hcstd/mora.hpp"
#include "hcstd/semistd.hpp"

namespace hcstd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitUsage = 2;

enum class Command { std_basis, hc, vdim, milnor, tjurina, run, bench };

inline std::optional<Command> parse_command(const std::string& s) {
  if (s == "std") return Command::std_basis;
  if (s == "hc") return Command::hc;
  if (s == "vdim") return Command::vdim;
  if (s == "milnor") return Command::milnor;
  if (s == "tjurina") return Command::tjurina;
  if (s == "run") return Command::run;
  if (s == "bench") return Command::bench;
  return std::nullopt;
}

struct CommandOptions {
  std::optional<std::uint32_t> prime;
  std::optional<std::vector<std::int64_t>> point;
  std::uint64_t seed = 100;
  std::size_t max_retries = 5;
  bool no_truncate = false;
  bool json = false;
  std::optional<double> timeout_seconds;
  bool timings = false;
  std::optional<std::string> ideal;
  std::optional<std::string> poly;
  std::vector<int> examples;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Exit code for an exception escaping a command: 2 for malformed input or
/// configuration, 1 for everything else.
inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidArgument*>(&e) ||
      dynamic_cast<const DomainMismatch*>(&e)) {
    return kExitUsage;
  }
  return kExitMath;
}

namespace detail {

inline std::optional<std::chrono::steady_clock::time_point> deadline_from(const CommandOptions& o) {
  if (!o.timeout_seconds) return std::nullopt;
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
             std::chrono::duration<double>(*o.timeout_seconds));
}

inline HcStdConfig make_config(const Session& s, const CommandOptions& o) {
  HcStdConfig c;
  c.seed = o.seed;
  c.max_retries = o.max_retries;
  c.truncate = !o.no_truncate;
  c.std_options.deadline = deadline_from(o);
  if (o.prime || o.point) {
    if (s.domain.characteristic != 0 && !s.domain.has_parameters()) {
      throw InvalidArgument("--prime/--point need a ring over Q or with parameters");
    }
    if (o.point && !s.domain.has_parameters()) throw InvalidArgument("--point needs a ring with parameters");
    SpecializationPoint pt{o.prime, o.point, 0};
    residue_domain(s.domain, pt);
    c.user_override = pt;
  }
  return c;
}

template <class Field>
const IdealPresentation<Field>& target_ideal(const Definitions<Field>& d, const CommandOptions& o) {
  const std::optional<std::string>& name = o.ideal ? o.ideal : d.last_ideal;
  if (!name) throw InvalidArgument("the session defines no ideal");
  auto it = d.ideals.find(*name);
  if (it == d.ideals.end()) throw InvalidArgument("no ideal named '" + *name + "'");
  return it->second;
}

template <class Field>
const typename Definitions<Field>::Poly& target_poly(const Definitions<Field>& d, const CommandOptions& o) {
  const std::optional<std::string>& name = o.poly ? o.poly : d.last_poly;
  if (!name) throw InvalidArgument("the session defines no polynomial");
  auto it = d.polys.find(*name);
  if (it == d.polys.end()) throw InvalidArgument("no polynomial named '" + *name + "'");
  return it->second;
}

// Report of a plain untruncated computation, shaped like an hc_std report.
template <class Field>
AlgorithmReport<Field> direct_report(const IdealPresentation<Field>& ideal, const StdOptions& opts) {
  AlgorithmReport<Field> r;
  hcstd::detail::Stopwatch clock;
  r.basis = standard_basis(clear_denominators(ideal), NoBound{}, opts);
  r.timings.main_ms = clock.lap();
  const Staircase st = leading_ideal(r.basis);
  r.d0 = vdim(st);
  if (r.d0) r.hc = highest_corner(st);
  r.timings.verify_ms = clock.lap();
  return r;
}

inline std::string number_output(const char* key, std::uint64_t v, bool json) {
  if (json) return Json{{key, v}}.dump(2) + "\n";
  return std::to_string(v) + "\n";
}

template <class Field>
std::string dispatch(const Session& s, const Definitions<Field>& d, Command cmd, const CommandOptions& o) {
  const ReportOptions ropts{o.timings};
  const HcStdConfig config = make_config(s, o);

  if (cmd == Command::milnor || cmd == Command::tjurina) {
    const bool tj = cmd == Command::tjurina;
    auto ideal = jacobian_ideal(d.ring, target_poly(d, o), tj);
    auto r = hc_std(ideal, config);
    return number_output(tj ? "tjurina" : "milnor", *r.d0, o.json);
  }

  const auto& ideal = target_ideal(d, o);
  if (cmd == Command::std_basis && o.no_truncate) {
    auto r = direct_report(ideal, config.std_options);
    if (!r.d0) throw NotZeroDimensional("the ideal is not zero-dimensional");
    if (o.json) {
      Json j;
      j["basis"] = basis_json(r.basis);
      j["leading_ideal"] = staircase_json(leading_ideal(r.basis));
      j["vdim"] = *r.d0;
      return j.dump(2) + "\n";
    }
    return report_text(r, ropts);
  }

  auto r = hc_std(ideal, config);
  const auto& vars = s.order.variables();
  switch (cmd) {
    case Command::run:
      return o.json ? report_json(r, ropts).dump(2) + "\n" : report_text(r, ropts);
    case Command::std_basis: {
      if (!o.json) return report_text(r, ropts);
      Json j;
      j["basis"] = basis_json(r.basis);
      j["leading_ideal"] = staircase_json(leading_ideal(r.basis));
      j["vdim"] = *r.d0;
      return j.dump(2) + "\n";
    }
    case Command::hc: {
      std::string hc = r.hc.monomial ? format_monomial(*r.hc.monomial, vars) : "none";
      if (o.json) return Json{{"hc", r.hc.monomial ? Json(hc) : Json(nullptr)}}.dump(2) + "\n";
      return hc + "\n";
    }
    case Command::vdim:
      return number_output("vdim", *r.d0, o.json);
    default:
      throw InvalidArgument("command needs no session");
  }
}

inline std::string fixed1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace detail

/// Runs one command against a parsed session. Exceptions are mapped to exit codes
/// and the message is placed in `err`.
inline CommandResult run_command(const Session& session, Command cmd, const CommandOptions& opts) {
  CommandResult res;
  try {
    if (cmd == Command::bench) throw InvalidArgument("bench runs on the built-in examples, not a session");
    res.out = std::visit([&](const auto& d) { return detail::dispatch(session, d, cmd, opts); }, session.defs);
  } catch (const std::exception& e) {
    res.exit_code = exit_code_for(e);
    res.err = e.what();
  }
  return res;
}

/// One CSV row of the benchmark harness; untruncated_ms is empty when skipped.
struct BenchRow {
  int example = 0;
  std::optional<double> truncated_ms;
  std::optional<double> untruncated_ms;
  bool truncated_timeout = false;
  bool untruncated_timeout = false;
};

inline std::string bench_csv_line(const BenchRow& r, double timeout_ms) {
  std::string line = std::to_string(r.example) + ",";
  if (r.truncated_timeout) return line + "TIMEOUT,SKIPPED,";
  line += detail::fixed1(*r.truncated_ms) + ",";
  const double t = std::max(*r.truncated_ms, 0.1);
  if (r.untruncated_timeout) return line + "TIMEOUT,>=" + detail::fixed1(timeout_ms / t);
  return line + detail::fixed1(*r.untruncated_ms) + "," + detail::fixed1(*r.untruncated_ms / t);
}

/// Times each example with truncation (the full algorithm) and without (a plain
/// standard basis computation), each under the same timeout.
inline BenchRow bench_example(int n, const CommandOptions& opts) {
  BenchRow row;
  row.example = n;
  const Session s = parse_session(example_session(n, opts.seed));
  std::visit(
      [&](const auto& d) {
        const auto& ideal = detail::target_ideal(d, opts);
        HcStdConfig config = detail::make_config(s, opts);
        config.truncate = true;
        hcstd::detail::Stopwatch clock;
        try {
          (void)hc_std(ideal, config);
          row.truncated_ms = clock.lap();
        } catch (const Timeout&) {
          row.truncated_timeout = true;
          return;
        }
        StdOptions plain;
        plain.deadline = detail::deadline_from(opts);
        clock.lap();
        try {
          (void)standard_basis(clear_denominators(ideal), NoBound{}, plain);
          row.untruncated_ms = clock.lap();
        } catch (const Timeout&) {
          row.untruncated_timeout = true;
        }
      },
      s.defs);
  return row;
}

/// Writes the CSV header and one row per example to `out` as each finishes.
inline CommandResult run_bench(const CommandOptions& opts, std::ostream& out) {
  CommandResult res;
  try {
    std::vector<int> examples = opts.examples;
    if (examples.empty()) {
      for (int n = 1; n <= kExampleCount; ++n) examples.push_back(n);
    }
    for (int n : examples) {
      if (n < 1 || n > kExampleCount) throw InvalidArgument("unknown example " + std::to_string(n));
    }
    const double timeout_ms = opts.timeout_seconds ? *opts.timeout_seconds * 1000.0 : 0.0;
    out << "example,truncated_ms,untruncated_ms,speedup" << std::endl;
    for (int n : examples) out << bench_csv_line(bench_example(n, opts), timeout_ms) << std::endl;
  } catch (const std::exception& e) {
    res.exit_code = exit_code_for(e);
    res.err = e.what();
  }
  return res;
}

}  // namespace hcstd::cli
