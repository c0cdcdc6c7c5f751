#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "hyperee/exact.hpp"
#include "hyperee/hypergraph.hpp"

namespace hyperee {

/// Work limits for exact trace enumeration.
struct TraceBudget {
  /// Search nodes visited per order d before giving up with InfeasibleError.
  std::uint64_t max_selections = 1'000'000'000;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Exact Tr_0 .. Tr_D of an adjacency tensor.
struct TraceSequence {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Rational> values;

  std::size_t max_order() const { return values.empty() ? 0 : values.size() - 1; }
};

/// mu_d(j): the vertex-j diagonal contribution to Tr_d.
struct VertexTraceTerm {
  std::size_t d = 0;
  Vertex j = 0;
  Rational value;
};

/// Tr_d together with its per-vertex split, produced by one enumeration.
struct TraceTerms {
  Rational total;
  std::vector<Rational> per_vertex;
  std::uint64_t selections = 0;
};

/// Exact d-th order traces of the adjacency tensor of one hypergraph.
///
/// Tr_d is evaluated as a sum over incidence multiplicities x(v,e) >= 0 with total d: vertex
/// v selects edge e x(v,e) times, contributing arcs v -> u for every other u in e. The
/// differential operator of the trace definition keeps exactly the balanced arc multisets
/// (in-degree = out-degree everywhere), and the surviving coefficient of tr(A^{d(m-1)})
/// is an Eulerian circuit count, obtained from the BEST theorem as a spanning
/// arborescence count. Everything is exact.
///
/// Arborescence counts are memoized on the gcd-normalized arc multiset, so one engine
/// reused across orders shares work between them. Not thread-safe; the engine spawns its
/// own workers per call.
class TraceEngine {
 public:
  explicit TraceEngine(const UniformHypergraph& h, TraceBudget budget = {});
  ~TraceEngine();
  TraceEngine(TraceEngine&&) noexcept;
  TraceEngine& operator=(TraceEngine&&) noexcept;

  /// Throws InfeasibleError naming (n, m, d) when the budget is exhausted.
  TraceTerms terms(std::size_t d);
  Rational trace(std::size_t d) { return terms(d).total; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Rational trace_d(const UniformHypergraph& h, std::size_t d, const TraceBudget& budget = {});
TraceSequence trace_sequence(const UniformHypergraph& h, std::size_t max_order, const TraceBudget& budget = {});
Rational vertex_trace_term(const UniformHypergraph& h, std::size_t d, Vertex j, const TraceBudget& budget = {});

/// Closed form of Tr_m: m^{m-1} (m-1)^{n-m} |E|.
Rational order_m_trace(const UniformHypergraph& h);

}  // namespace hyperee
