// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "hyperee/errors.hpp"
#include "hyperee/estrada.hpp"
#include "oracles.hpp"

using namespace hyperee;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

/// Half a unit in the last printed place of a value given to `digits` significant digits.
double half_unit(double printed, int digits) {
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(printed))));
  return 0.5 * std::pow(10.0, exponent - digits + 1);
}

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  o.detail.precision(10);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] %d %s: %s(%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), o.detail.str().c_str(), secs,
              o.ok ? "" : " first failure: ", o.first_failure.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

void closed_form_rows(Outcome& o) {
  struct Row {
    const char* name;
    UniformHypergraph h;
    double reference;
    double rel_tol;
    double abs_tol;
  };
  const Row rows[] = {
      {"star(3,1)", gen_hyperstar(3, 1), 13.5125, 1e-3, INFINITY},
      {"path(3,2)", gen_hyperpath(3, 2), 92.1756, 1e-3, INFINITY},
      {"star(3,3)", gen_hyperstar(3, 3), 521.5079, 1e-3, INFINITY},
      {"star(3,4)", gen_hyperstar(3, 4), 2698.5, 2e-4, 0.5},
  };
  for (const auto& r : rows) {
    const auto q = hyperstar_edge_count(r.h);
    o.expect(q.has_value(), std::string(r.name) + " not detected as a hyperstar");
    if (!q) continue;
    const double v = ee_hyperstar(3, *q).value;
    o.detail << r.name << '=' << v << ' ';
    o.expect(rel(v, r.reference) <= r.rel_tol && std::abs(v - r.reference) <= r.abs_tol, r.name);
  }
}

void series_rows(Outcome& o) {
  struct Row {
    const char* name;
    std::size_t edges;
    double reference;
  };
  const Row rows[] = {{"path(3,3)", 3, 5.2121e+02}, {"path(3,4)", 4, 2.6948e+03}};
  bool guard_triggered = false;
  for (const auto& r : rows) {
    const auto h = gen_hyperpath(3, r.edges);
    const double rho = spectral_radius(AdjacencyTensor(h)).upper;
    const auto res = ee_trace_series(h, 1e-6, rho);
    o.detail << r.name << '=' << res.value << " +- " << res.error_bound << " (" << res.terms_used << " terms) ";
    if (!res.converged) {
      guard_triggered = true;
      continue;
    }
    const double dev = std::abs(res.value - r.reference);
    o.expect(dev / r.reference <= 5e-3, std::string(r.name) + " outside 0.5%");
    // The reference carries five significant digits; the remaining gap must be rounding.
    o.expect(dev <= res.error_bound + half_unit(r.reference, 5), std::string(r.name) + " deviation beyond rounding");
  }
  if (guard_triggered) {
    o.detail << "guard triggered; checking one- and two-edge paths at tol 1e-4 ";
    const double refs[] = {13.5125, 92.1756};
    for (std::size_t p = 1; p <= 2; ++p) {
      const auto h = gen_hyperpath(3, p);
      const auto res = ee_trace_series(h, 1e-4, spectral_radius(AdjacencyTensor(h)).upper);
      o.expect(res.converged && rel(res.value, refs[p - 1]) <= 1e-3, "small path series");
    }
  }
}

void single_edge_oracle(Outcome& o) {
  const auto h = gen_hyperpath(3, 1);
  SpectrumOptions opts;
  opts.prefer_closed_form = false;
  const auto s = spectrum(h, opts);
  o.expect(s.provenance == Spectrum::Provenance::NewtonRoots, "expected the root-finding path");
  const std::complex<double> expected[] = {{0, 0}, {1, 0}, {-0.5, std::sqrt(3.0) / 2}, {-0.5, -std::sqrt(3.0) / 2}};
  o.expect(s.entries.size() == 4, "expected four distinct eigenvalues");
  double worst = 0;
  for (const auto& z : expected) {
    bool found = false;
    for (const auto& e : s.entries) {
      if (std::abs(e.value - z) <= 1e-8) {
        found = e.multiplicity == 3;
        worst = std::max(worst, std::abs(e.value - z));
      }
    }
    o.expect(found, "eigenvalue missing or multiplicity not 3");
  }
  const auto b = bounds_refined(s, h);
  const double t1 = 11 + std::exp(3.0);
  const double t2 = 0.5 + std::exp(3.0);
  o.expect(b.upper_thm32_1 && std::abs(*b.upper_thm32_1 - t1) <= 1e-12 * t1, "first spectrum bound");
  o.expect(b.upper_thm32_2 && std::abs(*b.upper_thm32_2 - t2) <= 1e-12 * t2, "second spectrum bound");
  o.detail << "max value error " << worst << ", bounds " << b.upper_thm32_1.value_or(NAN) << " / "
           << b.upper_thm32_2.value_or(NAN) << ' ';
}

struct CorpusStats {
  std::size_t instances = 0;
  bool m2 = false, m3 = false, m4 = false;
  std::size_t max_n = 0;
};

CorpusStats stats(const std::vector<corpus::Instance>& c) {
  CorpusStats s;
  s.instances = c.size();
  for (const auto& i : c) {
    s.m2 = s.m2 || i.h.uniformity() == 2;
    s.m3 = s.m3 || i.h.uniformity() == 3;
    s.m4 = s.m4 || i.h.uniformity() == 4;
    s.max_n = std::max(s.max_n, i.h.vertex_count());
  }
  return s;
}

void check_corpus_shape(Outcome& o, const std::vector<corpus::Instance>& c) {
  const auto s = stats(c);
  o.expect(s.instances >= 20 && s.m2 && s.m3 && s.m4 && s.max_n <= 7, "corpus shape");
  o.detail << s.instances << " instances ";
}

void low_order_identities(Outcome& o) {
  const auto c = corpus::instances();
  check_corpus_shape(o, c);
  for (const auto& inst : c) {
    const std::size_t m = inst.h.uniformity();
    const std::size_t n = inst.h.vertex_count();
    TraceEngine engine(inst.h);
    for (std::size_t d = 1; d < m; ++d) o.expect(engine.trace(d) == 0, inst.name + " low-order trace");
    const Integer expected =
        ipow(Integer(m), m - 1) * ipow(Integer(m - 1), n - m) * Integer(static_cast<unsigned long>(inst.h.edge_count()));
    o.expect(engine.trace(m) == Rational(expected), inst.name + " order-m trace");
  }
}

void per_vertex_split(Outcome& o) {
  const auto c = corpus::instances();
  check_corpus_shape(o, c);
  std::size_t checked = 0;
  for (const auto& inst : c) {
    const std::size_t m = inst.h.uniformity();
    for (std::size_t d = 0; d <= m + 3; ++d) {
      Rational sum = 0;
      for (Vertex j = 0; j < inst.h.vertex_count(); ++j) sum += vertex_trace_term(inst.h, d, j);
      o.expect(sum == trace_d(inst.h, d), inst.name + " d=" + std::to_string(d));
      ++checked;
    }
  }
  o.detail << checked << " (instance, d) pairs ";
}

void bound_sandwich(Outcome& o) {
  const auto c = corpus::instances();
  check_corpus_shape(o, c);
  std::size_t computed = 0, with_spectrum = 0, empties = 0;
  for (const auto& inst : c) {
    const auto& h = inst.h;
    const auto rho = spectral_radius(AdjacencyTensor(h));
    std::optional<Spectrum> s;
    EstradaResult ee;
    try {
      if (hyperstar_edge_count(h) || eigenvalue_count(h.uniformity(), h.vertex_count()) <= 128) {
        s = spectrum(h);
        ee = ee_from_spectrum(*s);
      } else {
        ee = ee_trace_series(h, 1e-9, rho.upper, {100'000'000, 0});
        if (!ee.converged) continue;
      }
    } catch (const InfeasibleError&) {
      continue;
    }
    ++computed;
    with_spectrum += s.has_value();
    const auto b = bounds_report(h, rho, s ? &*s : nullptr);
    std::vector<std::pair<const char*, double>> uppers = {{"upper radius", b.upper_thm31},
                                                          {"count/radius 1", b.upper_cor33_1},
                                                          {"count/radius 2", b.upper_cor33_2}};
    if (b.upper_thm32_1) {
      uppers.emplace_back("spectrum 1", *b.upper_thm32_1);
      uppers.emplace_back("spectrum 2", *b.upper_thm32_2);
    }
    const double v = ee.value;
    if (h.empty()) {
      ++empties;
      o.expect(std::abs(b.lower_thm31 - v) <= 1e-9, inst.name + " lower not tight");
      for (const auto& [name, u] : uppers) o.expect(std::abs(u - v) <= 1e-9, inst.name + " " + name + " not tight");
    } else {
      const double slack = 1e-9 * std::max(1.0, v) + ee.error_bound;
      o.expect(b.lower_thm31 < v - slack, inst.name + " lower not strict");
      for (const auto& [name, u] : uppers) o.expect(v < u - slack, inst.name + " " + name + " not strict");
    }
  }
  o.expect(computed == c.size(), "some corpus instances had no computable index");
  o.detail << computed << " with index, " << with_spectrum << " with spectrum, " << empties << " empty ";
}

void symmetric_consistency(Outcome& o) {
  double worst_sym = 0, worst_fast = 0;
  for (std::size_t m : {3, 4}) {
    for (std::size_t q = 1; q <= 4; ++q) {
      const auto s = hyperstar_spectrum(m, q);
      const auto reps = symmetric_representatives(s);
      const double general = ee_symmetric(reps).value;
      const double fast = m == 3 ? ee_symmetric_m3(reps).value : ee_symmetric_m4(reps).value;
      worst_sym = std::max(worst_sym, rel(general, ee_from_spectrum(s).value));
      worst_fast = std::max(worst_fast, rel(fast, general));
    }
    for (std::size_t q = 1; q <= 6; ++q) {
      const double fast = m == 3 ? ee_hyperstar_m3(q).value : ee_hyperstar_m4(q).value;
      worst_fast = std::max(worst_fast, rel(fast, ee_hyperstar(m, q).value));
    }
  }
  o.expect(worst_sym <= 1e-8, "orbit formula vs spectrum sum");
  o.expect(worst_fast <= 1e-10, "expanded forms vs general form");
  o.detail << "orbit vs sum " << worst_sym << ", expanded vs general " << worst_fast << ' ';
}

void classical_reduction(Outcome& o) {
  double worst = 0;
  for (std::size_t q = 1; q <= 10; ++q) {
    const double s = std::sqrt(static_cast<double>(q));
    worst = std::max(worst, std::abs(ee_hyperstar(2, q).value - (static_cast<double>(q) - 1 + std::exp(s) + std::exp(-s))));
  }
  o.expect(worst <= 1e-8, "graph star formula");
  std::size_t graphs = 0;
  auto check_traces = [&](const std::string& name, const UniformHypergraph& h) {
    TraceEngine engine(h);
    for (std::size_t d = 0; d <= 8; ++d) {
      const Integer expected = d == 0 ? Integer(static_cast<unsigned long>(h.vertex_count())) : oracle::matrix_power_trace(h, d);
      o.expect(engine.trace(d) == Rational(expected), name + " d=" + std::to_string(d));
    }
    ++graphs;
  };
  for (std::size_t q = 1; q <= 10; ++q) check_traces("star(2," + std::to_string(q) + ")", gen_hyperstar(2, q));
  for (const auto& inst : corpus::instances()) {
    if (inst.h.uniformity() == 2) check_traces(inst.name, inst.h);
  }
  o.detail << "star formula error " << worst << ", " << graphs << " graphs matched matrix traces ";
}

}  // namespace

int main() {
  criterion(1, "closed-form reference rows", closed_form_rows);
  criterion(2, "trace-series reference rows", series_rows);
  criterion(3, "single-edge spectrum and spectrum bounds", single_edge_oracle);
  criterion(4, "vanishing low-order traces and order-m trace", low_order_identities);
  criterion(5, "per-vertex trace decomposition", per_vertex_split);
  criterion(6, "bound sandwich", bound_sandwich);
  criterion(7, "m-symmetric formula consistency", symmetric_consistency);
  criterion(8, "classical graph reduction", classical_reduction);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
