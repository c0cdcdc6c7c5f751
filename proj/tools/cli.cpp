#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hyperee/errors.hpp"
#include "hyperee/estrada.hpp"
#include "hyperee/hypergraph.hpp"
#include "hyperee/report.hpp"
#include "hyperee/spectrum.hpp"
#include "hyperee/tensor.hpp"

namespace hyperee::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::vector<std::size_t> star;
  std::vector<std::size_t> path;
  std::vector<std::size_t> empty;
  double tol = 1e-6;
  std::string method = "auto";
  std::optional<std::size_t> max_d;
  std::size_t budget_degree = 128;
  std::uint64_t budget_selections = 1'000'000'000;
  std::string format = "human";
  unsigned threads = 0;
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string fmt(std::complex<double> z) {
  if (z.imag() == 0) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "Hypergraph file: header 'm n q', then q lines of 1-based vertices")
      ->check(CLI::ExistingFile);
  sub->add_option("--star", o.star, "m-uniform hyperstar with q edges")->expected(2)->type_name("M Q");
  sub->add_option("--path", o.path, "m-uniform loose hyperpath with p edges")->expected(2)->type_name("M P");
  sub->add_option("--empty", o.empty, "Edgeless m-uniform hypergraph on n vertices")->expected(2)->type_name("M N");
}

void add_common(CLI::App* sub, Options& o) {
  add_input(sub, o);
  sub->add_option("--tol", o.tol, "Absolute tolerance for the trace series")->check(CLI::PositiveNumber);
  sub->add_option("--budget-degree", o.budget_degree, "Largest eigenvalue count k attempted by root finding")
      ->check(CLI::PositiveNumber);
  sub->add_option("--budget-selections", o.budget_selections, "Search nodes allowed per trace order")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
  sub->add_option("--threads", o.threads, "Trace worker threads (0 = hardware)")->envname("HYPEREE_THREADS");
}

UniformHypergraph resolve(const Options& o) {
  const int given = !o.input.empty() + !o.star.empty() + !o.path.empty() + !o.empty.empty();
  if (given != 1) throw UsageError("exactly one of --input, --star, --path, --empty is required");
  try {
    if (!o.input.empty()) return read_hypergraph_file(o.input);
    if (!o.star.empty()) return gen_hyperstar(o.star[0], o.star[1]);
    if (!o.path.empty()) return gen_hyperpath(o.path[0], o.path[1]);
    return gen_empty(o.empty[0], o.empty[1]);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

TraceBudget trace_budget(const Options& o) { return {o.budget_selections, o.threads}; }

SpectrumOptions spectrum_options(const Options& o) {
  SpectrumOptions s;
  s.max_degree = o.budget_degree;
  s.trace = trace_budget(o);
  return s;
}

bool within_degree_budget(const UniformHypergraph& h, const Options& o) {
  return eigenvalue_count(h.uniformity(), h.vertex_count()) <= static_cast<unsigned long>(o.budget_degree);
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto h = resolve(o);
  if (o.format == "json") {
    Json edges = Json::array();
    for (const auto& e : h.edges()) {
      Json edge = Json::array();
      for (Vertex v : e) edge.push_back(v + 1);
      edges.push_back(edge);
    }
    out << Json{{"m", h.uniformity()}, {"n", h.vertex_count()}, {"edges", edges}}.dump() << '\n';
  } else {
    out << serialize(h);
  }
  return Ok;
}

EstradaResult compute_ee(const UniformHypergraph& h, const Options& o) {
  const auto& method = o.method;
  const auto star_q = hyperstar_edge_count(h);
  if (method == "star" || (method == "auto" && star_q)) {
    if (!star_q) throw Refusal("input is not a hyperstar");
    return ee_hyperstar(h.uniformity(), *star_q);
  }
  if (method == "auto" && within_degree_budget(h, o)) {
    try {
      return ee_from_spectrum(spectrum(h, spectrum_options(o)));
    } catch (const InfeasibleError&) {
      // Traces up to order k ran out of budget; the series needs fewer orders.
    }
  }
  if (method == "spectrum" || method == "symmetric") {
    const auto s = spectrum(h, spectrum_options(o));
    if (method != "symmetric") return ee_from_spectrum(s);
    try {
      return ee_symmetric(symmetric_representatives(s));
    } catch (const std::invalid_argument& e) {
      throw Refusal(e.what());
    }
  }
  const double rho = spectral_radius(AdjacencyTensor(h)).upper;
  return ee_trace_series(h, o.tol, rho, trace_budget(o));
}

int cmd_ee(const Options& o, std::ostream& out, std::ostream& err) {
  const auto h = resolve(o);
  const auto r = compute_ee(h, o);
  if (o.format == "json") {
    out << to_json(r).dump() << '\n';
  } else if (o.format == "csv") {
    out << "value,method,error_bound,terms_used,imag_discard,converged\n"
        << fmt(r.value) << ',' << to_string(r.method) << ',' << fmt(r.error_bound) << ',' << r.terms_used << ','
        << fmt(r.imag_discard) << ',' << (r.converged ? "true" : "false") << '\n';
  } else {
    out << "EE = " << fmt(r.value) << "\nmethod: " << to_string(r.method) << "\nerror bound: " << fmt(r.error_bound)
        << '\n';
    if (r.method == EstradaResult::Method::TraceSeries) out << "terms used: " << r.terms_used << '\n';
  }
  if (!r.converged) {
    err << "series stopped before reaching --tol: " << r.note << '\n';
    return Infeasible;
  }
  return Ok;
}

int cmd_traces(const Options& o, std::ostream& out) {
  const auto h = resolve(o);
  const std::size_t max_d = o.max_d.value_or(h.uniformity() + 3);
  const auto t = trace_sequence(h, max_d, trace_budget(o));
  if (o.format == "json") {
    out << to_json(t).dump() << '\n';
  } else if (o.format == "csv") {
    out << "d,trace\n";
    for (std::size_t d = 0; d < t.values.size(); ++d) out << d << ',' << to_string(t.values[d]) << '\n';
  } else {
    for (std::size_t d = 0; d < t.values.size(); ++d) out << (d ? "," : "") << to_string(t.values[d]);
    out << '\n';
  }
  return Ok;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const auto h = resolve(o);
  const auto s = spectrum(h, spectrum_options(o));
  if (o.format == "json") {
    out << to_json(s).dump() << '\n';
  } else if (o.format == "csv") {
    out << "re,im,mult\n";
    for (const auto& e : s.entries) out << fmt(e.value.real()) << ',' << fmt(e.value.imag()) << ',' << e.multiplicity << '\n';
  } else {
    out << "k = " << s.k << " (" << to_string(s.provenance) << ", residual " << fmt(s.residual) << ")\n";
    for (const auto& e : s.entries) out << "  " << fmt(e.value) << "  x" << e.multiplicity << '\n';
  }
  return Ok;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const auto h = resolve(o);
  const auto rho = spectral_radius(AdjacencyTensor(h));
  std::optional<Spectrum> s;
  if (hyperstar_edge_count(h) || within_degree_budget(h, o)) s = spectrum(h, spectrum_options(o));
  const auto b = bounds_report(h, rho, s ? &*s : nullptr);
  if (o.format == "json") {
    out << to_json(b).dump() << '\n';
    return Ok;
  }
  const auto opt = [](const std::optional<double>& x) { return x ? fmt(*x) : std::string(); };
  if (o.format == "csv") {
    out << "lower_thm31,upper_thm31,upper_thm32_1,upper_thm32_2,upper_cor33_1,upper_cor33_2,r_value,rho_lower,rho_upper\n"
        << fmt(b.lower_thm31) << ',' << fmt(b.upper_thm31) << ',' << opt(b.upper_thm32_1) << ','
        << opt(b.upper_thm32_2) << ',' << fmt(b.upper_cor33_1) << ',' << fmt(b.upper_cor33_2) << ','
        << opt(b.r_value) << ',' << fmt(rho.lower) << ',' << fmt(rho.upper) << '\n';
    return Ok;
  }
  out << "rho in [" << fmt(rho.lower) << ", " << fmt(rho.upper) << "] (" << to_string(rho.method) << ")\n"
      << "trace/radius:    " << fmt(b.lower_thm31) << " <= EE <= " << fmt(b.upper_thm31) << '\n';
  if (b.upper_thm32_1) {
    out << "spectrum:        r = " << fmt(*b.r_value) << ", EE <= " << fmt(*b.upper_thm32_1) << ", EE <= "
        << fmt(*b.upper_thm32_2) << '\n';
  } else {
    out << "spectrum:        unavailable (k above --budget-degree)\n";
  }
  out << "radius/count:    EE <= " << fmt(b.upper_cor33_1) << ", EE <= " << fmt(b.upper_cor33_2) << '\n';
  return Ok;
}

int cmd_table1(const Options& o, std::ostream& out) {
  const auto rows = table1(trace_budget(o));
  bool all_ok = true;
  for (const auto& r : rows) all_ok = all_ok && r.ok();
  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& r : rows) {
      j.push_back({{"hypergraph", r.label},
                   {"computed", r.skipped ? Json(nullptr) : number(r.computed)},
                   {"reference", number(r.reference)},
                   {"abs_dev", r.skipped ? Json(nullptr) : number(r.abs_dev)},
                   {"rel_dev", r.skipped ? Json(nullptr) : number(r.rel_dev)},
                   {"method", r.method},
                   {"error_bound", number(r.error_bound)},
                   {"status", r.skipped ? "SKIPPED" : (r.ok() ? "ok" : "MISMATCH")},
                   {"reason", r.reason}});
    }
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "hypergraph,computed,reference,abs_dev,rel_dev,method,status\n";
    for (const auto& r : rows) {
      out << r.label << ',' << (r.skipped ? "" : fmt(r.computed)) << ',' << fmt(r.reference) << ','
          << (r.skipped ? "" : fmt(r.abs_dev)) << ',' << (r.skipped ? "" : fmt(r.rel_dev)) << ',' << r.method << ','
          << (r.skipped ? "SKIPPED" : (r.ok() ? "ok" : "MISMATCH")) << '\n';
    }
  } else {
    char line[256];
    std::snprintf(line, sizeof line, "%-34s %14s %12s %11s %11s  %-22s %s\n", "hypergraph", "computed", "reference",
                  "abs dev", "rel dev", "method", "status");
    out << line;
    for (const auto& r : rows) {
      if (r.skipped) {
        std::snprintf(line, sizeof line, "%-34s %14s %12.4f %11s %11s  %-22s SKIPPED (%s)\n", r.label.c_str(), "-",
                      r.reference, "-", "-", r.method.c_str(), r.reason.c_str());
      } else {
        std::snprintf(line, sizeof line, "%-34s %14.6f %12.4f %11.3e %11.3e  %-22s %s\n", r.label.c_str(),
                      r.computed, r.reference, r.abs_dev, r.rel_dev, r.method.c_str(), r.ok() ? "ok" : "MISMATCH");
      }
      out << line;
    }
  }
  for (const auto& r : rows) {
    if (r.skipped) return TableMismatch;
  }
  return all_ok ? Ok : TableMismatch;
}

}  // namespace

std::vector<TableRow> table1(const TraceBudget& budget) {
  struct Row {
    const char* label;
    bool star;
    std::size_t edges;
    double reference;
    double rel_tolerance;
  };
  static const Row published[] = {
      {"3-uniform hyperpath with 1 edge", false, 1, 13.5125, 1e-3},
      {"3-uniform hyperpath with 2 edges", false, 2, 92.1756, 1e-3},
      {"3-uniform hyperstar with 3 edges", true, 3, 521.5079, 1e-3},
      {"3-uniform hyperpath with 3 edges", false, 3, 5.2121e+02, 5e-3},
      {"3-uniform hyperstar with 4 edges", true, 4, 2.6985e+03, 2e-4},
      {"3-uniform hyperpath with 4 edges", false, 4, 2.6948e+03, 5e-3},
  };
  std::vector<TableRow> rows;
  for (const auto& s : published) {
    TableRow row;
    row.label = s.label;
    row.reference = s.reference;
    row.rel_tolerance = s.rel_tolerance;
    const auto h = s.star ? gen_hyperstar(3, s.edges) : gen_hyperpath(3, s.edges);
    EstradaResult r;
    if (const auto q = hyperstar_edge_count(h)) {
      r = ee_hyperstar(3, *q);
    } else {
      r = ee_trace_series(h, 1e-6, spectral_radius(AdjacencyTensor(h)).upper, budget);
    }
    row.method = to_string(r.method);
    row.error_bound = r.error_bound;
    if (!r.converged) {
      row.skipped = true;
      row.reason = r.note;
    }
    row.computed = r.value;
    row.abs_dev = std::abs(r.value - s.reference);
    row.rel_dev = row.abs_dev / std::abs(s.reference);
    rows.push_back(row);
  }
  return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Estrada indices of uniform hypergraphs"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write a generated hypergraph in the input file format");
  add_input(gen, o);
  gen->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));

  auto* ee = app.add_subcommand("ee", "Estrada index");
  add_common(ee, o);
  ee->add_option("--method", o.method, "Computation method")
      ->check(CLI::IsMember({"auto", "spectrum", "series", "symmetric", "star"}));

  auto* traces = app.add_subcommand("traces", "Exact traces Tr_0 .. Tr_D");
  add_common(traces, o);
  traces->add_option("--max-d", o.max_d, "Largest order D (default m + 3)");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues with multiplicities");
  add_common(spectrum_cmd, o);

  auto* bounds = app.add_subcommand("bounds", "Upper and lower bounds on the Estrada index");
  add_common(bounds, o);

  auto* table = app.add_subcommand("table1", "Recompute the published table of hyperpath and hyperstar indices");
  table->add_option("--budget-selections", o.budget_selections, "Search nodes allowed per trace order")
      ->check(CLI::PositiveNumber);
  table->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
  table->add_option("--threads", o.threads, "Trace worker threads (0 = hardware)")->envname("HYPEREE_THREADS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? Ok : ParseFailure;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (ee->parsed()) return cmd_ee(o, out, err);
    if (traces->parsed()) return cmd_traces(o, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    return cmd_table1(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return ParseFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return ParseFailure;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return Infeasible;
  } catch (const Refusal& e) {
    err << "refused: " << e.what() << '\n';
    return Infeasible;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << '\n';
    return Infeasible;
  }
}

}  // namespace hyperee::cli
