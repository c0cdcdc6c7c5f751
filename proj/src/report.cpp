#include "hyperee/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace hyperee {

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return std::stod(buf);
}

namespace {

double real_of(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

std::optional<double> optional_of(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

Json optional_json(const std::optional<double>& x) { return x ? number(*x) : Json(nullptr); }

template <class Enum, std::size_t N>
Enum enum_of(const std::string& name, const Enum (&values)[N]) {
  for (Enum e : values) {
    if (to_string(e) == name) return e;
  }
  throw std::invalid_argument("unknown tag: " + name);
}

}  // namespace

Json to_json(const Spectrum& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    entries.push_back({{"re", number(e.value.real())}, {"im", number(e.value.imag())}, {"mult", e.multiplicity}});
  }
  return {{"k", s.k},
          {"m", s.m},
          {"entries", entries},
          {"provenance", to_string(s.provenance)},
          {"residual", number(s.residual)}};
}

Spectrum spectrum_from_json(const Json& j) {
  Spectrum s;
  s.k = j.at("k").get<std::uint64_t>();
  s.m = j.value("m", std::size_t{0});
  for (const auto& e : j.at("entries")) {
    s.entries.push_back({{e.at("re").get<double>(), e.at("im").get<double>()}, e.at("mult").get<std::uint64_t>()});
  }
  s.provenance = enum_of(j.at("provenance").get<std::string>(),
                         {Spectrum::Provenance::ClosedFormHyperstar, Spectrum::Provenance::NewtonRoots});
  s.residual = j.at("residual").get<double>();
  return s;
}

Json to_json(const SpectralRadiusEstimate& r) {
  return {{"lower", number(r.lower)},
          {"upper", number(r.upper)},
          {"method", to_string(r.method)},
          {"iterations", r.iterations}};
}

SpectralRadiusEstimate radius_from_json(const Json& j) {
  SpectralRadiusEstimate r;
  r.lower = j.at("lower").get<double>();
  r.upper = real_of(j.at("upper"));
  r.method = enum_of(j.at("method").get<std::string>(),
                     {SpectralRadiusEstimate::Method::PowerIteration, SpectralRadiusEstimate::Method::DegreeBound});
  r.iterations = j.at("iterations").get<std::size_t>();
  return r;
}

Json to_json(const EstradaResult& r) {
  Json j = {{"value", number(r.value)},
            {"method", to_string(r.method)},
            {"error_bound", number(r.error_bound)},
            {"terms_used", r.terms_used},
            {"imag_discard", number(r.imag_discard)},
            {"converged", r.converged}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

EstradaResult estrada_from_json(const Json& j) {
  EstradaResult r;
  r.value = real_of(j.at("value"));
  r.method = enum_of(j.at("method").get<std::string>(),
                     {EstradaResult::Method::SpectrumSum, EstradaResult::Method::TraceSeries,
                      EstradaResult::Method::SymmetricFormula, EstradaResult::Method::HyperstarClosedForm});
  r.error_bound = real_of(j.at("error_bound"));
  r.terms_used = j.at("terms_used").get<std::size_t>();
  r.imag_discard = j.at("imag_discard").get<double>();
  r.converged = j.at("converged").get<bool>();
  r.note = j.value("note", std::string{});
  return r;
}

Json to_json(const BoundsReport& b) {
  return {{"lower_thm31", number(b.lower_thm31)},
          {"upper_thm31", number(b.upper_thm31)},
          {"upper_thm32_1", optional_json(b.upper_thm32_1)},
          {"upper_thm32_2", optional_json(b.upper_thm32_2)},
          {"upper_cor33_1", number(b.upper_cor33_1)},
          {"upper_cor33_2", number(b.upper_cor33_2)},
          {"r_value", optional_json(b.r_value)},
          {"rho_used", to_json(b.rho_used)}};
}

BoundsReport bounds_from_json(const Json& j) {
  BoundsReport b;
  b.lower_thm31 = real_of(j.at("lower_thm31"));
  b.upper_thm31 = real_of(j.at("upper_thm31"));
  b.upper_thm32_1 = optional_of(j.at("upper_thm32_1"));
  b.upper_thm32_2 = optional_of(j.at("upper_thm32_2"));
  b.upper_cor33_1 = real_of(j.at("upper_cor33_1"));
  b.upper_cor33_2 = real_of(j.at("upper_cor33_2"));
  b.r_value = optional_of(j.at("r_value"));
  b.rho_used = radius_from_json(j.at("rho_used"));
  return b;
}

Json to_json(const TraceSequence& t) {
  Json values = Json::array();
  for (const auto& v : t.values) values.push_back(to_string(v));
  return {{"m", t.m}, {"n", t.n}, {"traces", values}};
}

TraceSequence traces_from_json(const Json& j) {
  TraceSequence t;
  t.m = j.at("m").get<std::size_t>();
  t.n = j.at("n").get<std::size_t>();
  for (const auto& v : j.at("traces")) t.values.emplace_back(v.get<std::string>());
  return t;
}

}  // namespace hyperee
