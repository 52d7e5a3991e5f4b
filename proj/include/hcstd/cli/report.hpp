#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

#include "hcstd/corner.hpp"
#include "hcstd/ring/format.hpp"
#include "hcstd/semistd.hpp"

namespace hcstd::cli {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  bool timings = false;
};

namespace detail {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json bound_json(const TruncationBound& bound, const OrderSpec& order) {
  Json j = Json::object();
  if (const auto* b = std::get_if<MonomialBound>(&bound)) {
    j["kind"] = "monomial";
    j["noether"] = format_monomial(b->noether, order.variables());
  } else if (const auto* d = std::get_if<DegreeBound>(&bound)) {
    j["kind"] = "degree";
    j["degree"] = d->degree;
  } else {
    j["kind"] = "none";
  }
  return j;
}

inline std::string bound_text(const TruncationBound& bound, const OrderSpec& order) {
  if (const auto* b = std::get_if<MonomialBound>(&bound)) {
    return "drop terms below " + format_monomial(b->noether, order.variables());
  }
  if (const auto* d = std::get_if<DegreeBound>(&bound)) return "drop terms of degree > " + std::to_string(d->degree);
  return "none";
}

inline std::string point_text(const SpecializationPoint& pt) {
  std::string s;
  if (pt.prime) s += "p=" + std::to_string(*pt.prime);
  if (pt.point) {
    if (!s.empty()) s += ' ';
    s += "t=(";
    for (std::size_t i = 0; i < pt.point->size(); ++i) s += (i ? "," : "") + std::to_string((*pt.point)[i]);
    s += ')';
  }
  return s;
}

inline std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace detail

template <class Field>
Json basis_json(const StandardBasis<Field>& basis) {
  Json arr = Json::array();
  for (const auto& g : basis.elements) arr.push_back(format_polynomial(*basis.ring, g));
  return arr;
}

inline Json staircase_json(const Staircase& st) {
  Json arr = Json::array();
  for (const auto& m : st.generators) arr.push_back(format_monomial(m, st.order.variables()));
  return arr;
}

template <class Field>
Json report_json(const AlgorithmReport<Field>& r, const ReportOptions& opts = {}) {
  const OrderSpec& order = r.basis.ring->order();
  const Staircase st = leading_ideal(r.basis);
  Json j;
  j["basis"] = basis_json(r.basis);
  j["leading_ideal"] = staircase_json(st);
  j["hc"] = r.hc.monomial ? Json(format_monomial(*r.hc.monomial, order.variables())) : Json(nullptr);
  j["vdim"] = detail::optional_json(vdim(st));
  j["d0"] = detail::optional_json(r.d0);
  j["dp"] = detail::optional_json(r.dp);
  Json pts = Json::array();
  for (const auto& a : r.attempts) {
    Json p;
    p["prime"] = detail::optional_json(a.point.prime);
    p["point"] = detail::optional_json(a.point.point);
    p["outcome"] = to_string(a.outcome);
    p["dp"] = detail::optional_json(a.dp);
    p["d0"] = detail::optional_json(a.d0);
    pts.push_back(std::move(p));
  }
  j["points_tried"] = std::move(pts);
  j["fallback"] = r.fallback;
  j["retries"] = r.retries();
  j["bound"] = detail::bound_json(r.bound, order);
  if (opts.timings) {
    j["timings_ms"] = {{"probe", r.timings.probe_ms},
                       {"bound", r.timings.bound_ms},
                       {"main", r.timings.main_ms},
                       {"verify", r.timings.verify_ms}};
  }
  return j;
}

template <class Field>
std::string report_text(const AlgorithmReport<Field>& r, const ReportOptions& opts = {}) {
  const OrderSpec& order = r.basis.ring->order();
  const Staircase st = leading_ideal(r.basis);
  std::ostringstream out;
  out << "standard basis (" << r.basis.elements.size() << " elements):\n";
  for (std::size_t i = 0; i < r.basis.elements.size(); ++i) {
    out << "  [" << i + 1 << "] " << format_polynomial(*r.basis.ring, r.basis.elements[i]) << '\n';
  }
  out << "leading ideal:";
  for (const auto& m : st.generators) out << ' ' << format_monomial(m, order.variables());
  out << '\n';
  out << "highest corner: " << (r.hc.monomial ? format_monomial(*r.hc.monomial, order.variables()) : "none")
      << '\n';
  const auto v = vdim(st);
  out << "vdim: " << (v ? std::to_string(*v) : "infinite") << '\n';
  out << "truncation: " << detail::bound_text(r.bound, order) << '\n';
  if (!r.attempts.empty()) {
    out << "points tried:\n";
    for (const auto& a : r.attempts) {
      out << "  " << detail::point_text(a.point) << ": " << to_string(a.outcome);
      if (a.dp) out << ", d(p)=" << *a.dp;
      if (a.d0) out << ", d(0)=" << *a.d0;
      out << '\n';
    }
  }
  if (r.fallback) out << "fallback: untruncated computation\n";
  if (opts.timings) {
    out << "timings (ms): probe " << detail::ms(r.timings.probe_ms) << ", bound " << detail::ms(r.timings.bound_ms)
        << ", main " << detail::ms(r.timings.main_ms) << ", verify " << detail::ms(r.timings.verify_ms) << '\n';
  }
  return out.str();
}

}  // namespace hcstd::cli
