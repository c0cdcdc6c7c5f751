#include "hyperee/trace.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <numeric>
#include <queue>
#include <thread>
#include <unordered_map>

#include "hyperee/errors.hpp"

namespace hyperee {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& k) const noexcept {
    std::size_t h = k.size();
    for (auto v : k) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

using ArborescenceMemo = std::unordered_map<std::vector<std::uint32_t>, Integer, KeyHash>;

/// Fraction-free Gaussian elimination; `a` is row-major size x size.
Integer bareiss_determinant(std::vector<Integer> a, std::size_t size) {
  if (size == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k * size + k] == 0) {
      std::size_t r = k + 1;
      while (r < size && a[r * size + k] == 0) ++r;
      if (r == size) return 0;
      for (std::size_t j = 0; j < size; ++j) std::swap(a[k * size + j], a[r * size + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        Integer& target = a[i * size + j];
        target = target * a[k * size + k] - a[i * size + k] * a[k * size + j];
        mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k * size + k];
  }
  Integer det = a[size * size - 1];
  return sign < 0 ? Integer(-det) : det;
}

/// Incidence variables x(v,e) and the per-vertex balance constraints over them.
struct Layout {
  struct Term {
    std::size_t constraint;
    int coef;
  };

  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Vertex> var_vertex;
  std::vector<std::size_t> var_edge;
  std::vector<std::vector<Term>> var_terms;        // constraints touched by each variable
  std::vector<std::vector<std::size_t>> closing;   // constraints whose last variable is this one
  std::vector<std::vector<int>> suffix_min;        // [constraint][i]: min(0, coefs at index >= i)
  std::vector<std::vector<int>> suffix_max;
  std::size_t constraint_count = 0;

  std::size_t size() const { return var_vertex.size(); }
};

/// Edges in breadth-first order over shared vertices, so each vertex's constraint closes
/// soon after its neighbourhood is assigned.
std::vector<std::size_t> edge_order(const UniformHypergraph& h) {
  std::vector<std::size_t> order;
  std::vector<bool> seen(h.edge_count(), false);
  for (std::size_t start = 0; start < h.edge_count(); ++start) {
    if (seen[start]) continue;
    std::queue<std::size_t> q;
    q.push(start);
    seen[start] = true;
    while (!q.empty()) {
      const std::size_t e = q.front();
      q.pop();
      order.push_back(e);
      for (Vertex v : h.edges()[e]) {
        for (std::size_t f : h.incident_edges(v)) {
          if (!seen[f]) {
            seen[f] = true;
            q.push(f);
          }
        }
      }
    }
  }
  return order;
}

Layout make_layout(const UniformHypergraph& h) {
  Layout L;
  L.m = h.uniformity();
  L.n = h.vertex_count();
  std::vector<std::vector<std::size_t>> edge_vars(h.edge_count());
  for (std::size_t e : edge_order(h)) {
    for (Vertex v : h.edges()[e]) {
      edge_vars[e].push_back(L.var_vertex.size());
      L.var_vertex.push_back(v);
      L.var_edge.push_back(e);
    }
  }
  const std::size_t V = L.size();
  L.var_terms.assign(V, {});
  L.closing.assign(V, {});

  // Balance at v: sum over e containing v of (sum_{u in e} x(u,e)) - m * x(v,e) = 0,
  // i.e. in-degree (m-1)-weighted equals out-degree.
  const int m = static_cast<int>(L.m);
  std::vector<std::vector<int>> coefs;
  for (Vertex v = 0; v < L.n; ++v) {
    if (h.incident_edges(v).empty()) continue;
    std::vector<int> c(V, 0);
    for (std::size_t e : h.incident_edges(v)) {
      for (std::size_t k : edge_vars[e]) c[k] += (L.var_vertex[k] == v) ? 1 - m : 1;
    }
    coefs.push_back(std::move(c));
  }
  L.constraint_count = coefs.size();
  L.suffix_min.assign(coefs.size(), std::vector<int>(V + 1, 0));
  L.suffix_max.assign(coefs.size(), std::vector<int>(V + 1, 0));
  for (std::size_t c = 0; c < coefs.size(); ++c) {
    std::size_t last = 0;
    for (std::size_t k = 0; k < V; ++k) {
      if (coefs[c][k] != 0) {
        L.var_terms[k].push_back({c, coefs[c][k]});
        last = k;
      }
    }
    L.closing[last].push_back(c);
    for (std::size_t k = V; k-- > 0;) {
      L.suffix_min[c][k] = std::min(L.suffix_min[c][k + 1], coefs[c][k]);
      L.suffix_max[c][k] = std::max(L.suffix_max[c][k + 1], coefs[c][k]);
    }
  }
  return L;
}

struct Accumulator {
  Integer total;
  std::vector<Integer> per_vertex;
};

class BudgetExceeded : public std::exception {};

/// Depth-first enumeration of balanced incidence vectors for one order d.
class Worker {
 public:
  Worker(const UniformHypergraph& h, const Layout& layout, std::size_t d, ArborescenceMemo& memo,
         const std::vector<Integer>& factorials, std::atomic<std::uint64_t>& nodes, std::uint64_t max_nodes,
         std::atomic<bool>& abort)
      : h_(h), L_(layout), d_(d), memo_(memo), fact_(factorials), nodes_(nodes), max_nodes_(max_nodes), abort_(abort),
        x_(layout.size(), 0), partial_(layout.constraint_count, 0) {}

  /// Runs the subtree with the first variable fixed to `first`.
  void run_branch(std::size_t first) {
    if (assign(0, first, d_)) descend(1, d_ - first);
    unassign(0);
  }

  void flush() {
    nodes_.fetch_add(local_nodes_);
    local_nodes_ = 0;
  }

  std::map<Integer, Accumulator>& results() { return acc_; }

 private:
  // Sets x_i = value (from `rem` remaining) and checks the constraints it touches.
  bool assign(std::size_t i, std::size_t value, std::size_t rem) {
    x_[i] = value;
    for (const auto& t : L_.var_terms[i]) partial_[t.constraint] += t.coef * static_cast<long>(value);
    for (std::size_t c : L_.closing[i]) {
      if (partial_[c] != 0) return false;
    }
    const long left = static_cast<long>(rem - value);
    for (std::size_t c = 0; c < L_.constraint_count; ++c) {
      const long p = partial_[c];
      if (p + L_.suffix_min[c][i + 1] * left > 0 || p + L_.suffix_max[c][i + 1] * left < 0) return false;
    }
    return true;
  }

  void unassign(std::size_t i) {
    for (const auto& t : L_.var_terms[i]) partial_[t.constraint] -= t.coef * static_cast<long>(x_[i]);
    x_[i] = 0;
  }

  void tick() {
    if (++local_nodes_ >= 4096) {
      const auto total = nodes_.fetch_add(local_nodes_) + local_nodes_;
      local_nodes_ = 0;
      if (total > max_nodes_) abort_.store(true);
      if (abort_.load(std::memory_order_relaxed)) throw BudgetExceeded{};
    }
  }

  void descend(std::size_t i, std::size_t rem) {
    tick();
    const std::size_t V = L_.size();
    if (i == V) {
      if (rem == 0) leaf();
      return;
    }
    // Forced values: the last variable absorbs the remainder, and a constraint whose last
    // variable is i determines it.
    long forced = -1;
    if (i + 1 == V) {
      forced = static_cast<long>(rem);
    } else if (!L_.closing[i].empty()) {
      const std::size_t c = L_.closing[i].front();
      int coef = 0;
      for (const auto& t : L_.var_terms[i]) {
        if (t.constraint == c) coef = t.coef;
      }
      const long p = partial_[c];
      if (p % coef != 0) return;
      forced = -p / coef;
      if (forced < 0 || forced > static_cast<long>(rem)) return;
    }
    if (forced >= 0) {
      if (assign(i, static_cast<std::size_t>(forced), rem)) descend(i + 1, rem - static_cast<std::size_t>(forced));
      unassign(i);
      return;
    }
    for (std::size_t v = 0; v <= rem; ++v) {
      if (assign(i, v, rem)) descend(i + 1, rem - v);
      unassign(i);
    }
  }

  void leaf() {
    const std::size_t n = L_.n;
    const std::size_t V = L_.size();
    std::vector<std::size_t> dv(n, 0);
    for (std::size_t k = 0; k < V; ++k) dv[L_.var_vertex[k]] += x_[k];

    std::vector<std::int64_t> index(n, -1);
    std::vector<Vertex> support;
    for (Vertex v = 0; v < n; ++v) {
      if (dv[v] > 0) {
        index[v] = static_cast<std::int64_t>(support.size());
        support.push_back(v);
      }
    }
    const std::size_t s = support.size();

    // Ordered edge selections per vertex: d_v! / prod_e x(v,e)!.
    Integer ways = 1;
    for (Vertex v : support) ways *= fact_[dv[v]];
    for (std::size_t k = 0; k < V; ++k) {
      if (x_[k] > 1) mpz_divexact(ways.get_mpz_t(), ways.get_mpz_t(), fact_[x_[k]].get_mpz_t());
    }

    std::vector<std::uint32_t> arcs(s * s, 0);
    for (std::size_t k = 0; k < V; ++k) {
      if (x_[k] == 0) continue;
      const Vertex u = L_.var_vertex[k];
      for (Vertex w : h_.edges()[L_.var_edge[k]]) {
        if (w != u) arcs[static_cast<std::size_t>(index[u]) * s + static_cast<std::size_t>(index[w])] += static_cast<std::uint32_t>(x_[k]);
      }
    }
    const Integer tau = arborescences(arcs, s);
    if (tau == 0) return;

    Integer denom = 1;
    for (Vertex v : support) denom *= static_cast<unsigned long>(dv[v] * (L_.m - 1));
    Integer weight = tau * ways;
    auto& a = acc_[denom];
    if (a.per_vertex.empty()) a.per_vertex.assign(n, 0);
    a.total += weight;
    for (Vertex v : support) a.per_vertex[v] += weight * static_cast<unsigned long>(dv[v]);
  }

  // Spanning arborescences of the arc multigraph (rooted at its first vertex), memoized on
  // the arc multiplicities divided by their gcd g: scaling every arc by g scales the
  // reduced Laplacian, and its determinant, by g^{s-1}.
  Integer arborescences(const std::vector<std::uint32_t>& arcs, std::size_t s) {
    std::uint32_t g = 0;
    for (auto c : arcs) g = std::gcd(g, c);
    std::vector<std::uint32_t> key;
    key.reserve(arcs.size() + 1);
    key.push_back(static_cast<std::uint32_t>(s));
    for (auto c : arcs) key.push_back(c / g);

    auto it = memo_.find(key);
    if (it == memo_.end()) {
      const std::size_t r = s - 1;
      std::vector<Integer> lap(r * r, 0);
      for (std::size_t u = 1; u < s; ++u) {
        unsigned long out = 0;
        for (std::size_t w = 0; w < s; ++w) out += key[1 + u * s + w];
        lap[(u - 1) * r + (u - 1)] = out;
        for (std::size_t w = 1; w < s; ++w) {
          if (w != u) lap[(u - 1) * r + (w - 1)] = -static_cast<long>(key[1 + u * s + w]);
        }
      }
      it = memo_.emplace(std::move(key), bareiss_determinant(std::move(lap), r)).first;
    }
    if (it->second == 0 || g == 1) return it->second;
    return it->second * ipow(Integer(g), s - 1);
  }

  const UniformHypergraph& h_;
  const Layout& L_;
  std::size_t d_;
  ArborescenceMemo& memo_;
  const std::vector<Integer>& fact_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t max_nodes_;
  std::atomic<bool>& abort_;
  std::uint64_t local_nodes_ = 0;
  std::vector<std::size_t> x_;
  std::vector<long> partial_;
  std::map<Integer, Accumulator> acc_;
};

}  // namespace

struct TraceEngine::Impl {
  UniformHypergraph h;
  TraceBudget budget;
  Layout layout;
  std::vector<ArborescenceMemo> memos;
  std::vector<Integer> factorials{1};

  Impl(const UniformHypergraph& hg, TraceBudget b) : h(hg), budget(b), layout(make_layout(hg)) {
    if (budget.threads == 0) budget.threads = std::max(1u, std::thread::hardware_concurrency());
    memos.resize(budget.threads);
  }
};

TraceEngine::TraceEngine(const UniformHypergraph& h, TraceBudget budget)
    : impl_(std::make_unique<Impl>(h, budget)) {}
TraceEngine::~TraceEngine() = default;
TraceEngine::TraceEngine(TraceEngine&&) noexcept = default;
TraceEngine& TraceEngine::operator=(TraceEngine&&) noexcept = default;

TraceTerms TraceEngine::terms(std::size_t d) {
  auto& I = *impl_;
  const std::size_t n = I.h.vertex_count();
  const std::size_t m = I.h.uniformity();
  const Integer scale = ipow(Integer(m - 1), n);  // (m-1)^{n-1} times the (m-1) of d(m-1)

  TraceTerms out;
  out.per_vertex.assign(n, 0);
  if (d == 0) {
    const Integer unit = ipow(Integer(m - 1), n - 1);
    out.total = eigenvalue_count(m, n);
    for (auto& v : out.per_vertex) v = unit;
    return out;
  }
  if (I.h.empty()) return out;

  while (I.factorials.size() <= d) I.factorials.push_back(I.factorials.back() * I.factorials.size());

  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(I.budget.threads, d + 1));
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::atomic<std::size_t> next_branch{0};
  std::vector<std::unique_ptr<Worker>> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.push_back(std::make_unique<Worker>(I.h, I.layout, d, I.memos[t], I.factorials, nodes,
                                               I.budget.max_selections, abort));
  }
  std::vector<std::exception_ptr> errors(threads);
  auto body = [&](unsigned t) {
    try {
      for (std::size_t b; (b = next_branch.fetch_add(1)) <= d && !abort.load();) workers[t]->run_branch(b);
      workers[t]->flush();
    } catch (const BudgetExceeded&) {
      abort.store(true);
    } catch (...) {
      abort.store(true);
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  if (abort.load() || nodes.load() > I.budget.max_selections) {
    throw InfeasibleError("instance too large: n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                          ", d=" + std::to_string(d) + " exceeds the selection budget of " +
                          std::to_string(I.budget.max_selections));
  }

  // Merge exactly; the sum does not depend on how branches were split across workers.
  std::map<Integer, Accumulator> merged;
  for (auto& w : workers) {
    for (auto& [denom, a] : w->results()) {
      auto& target = merged[denom];
      if (target.per_vertex.empty()) target.per_vertex.assign(n, 0);
      target.total += a.total;
      for (std::size_t j = 0; j < n; ++j) target.per_vertex[j] += a.per_vertex[j];
    }
  }
  Rational total = 0;
  for (const auto& [denom, a] : merged) {
    total += Rational(a.total, denom);
    for (std::size_t j = 0; j < n; ++j) out.per_vertex[j] += Rational(a.per_vertex[j], denom);
  }
  for (auto& v : out.per_vertex) {
    v *= scale;
    v.canonicalize();
  }
  out.total = total * Rational(scale * static_cast<unsigned long>(d));
  out.total.canonicalize();
  out.selections = nodes.load();
  return out;
}

Rational trace_d(const UniformHypergraph& h, std::size_t d, const TraceBudget& budget) {
  return TraceEngine(h, budget).trace(d);
}

TraceSequence trace_sequence(const UniformHypergraph& h, std::size_t max_order, const TraceBudget& budget) {
  TraceEngine engine(h, budget);
  TraceSequence seq{h.uniformity(), h.vertex_count(), {}};
  seq.values.reserve(max_order + 1);
  for (std::size_t d = 0; d <= max_order; ++d) seq.values.push_back(engine.trace(d));
  return seq;
}

Rational vertex_trace_term(const UniformHypergraph& h, std::size_t d, Vertex j, const TraceBudget& budget) {
  if (j >= h.vertex_count()) throw std::invalid_argument("vertex_trace_term: vertex out of range");
  return TraceEngine(h, budget).terms(d).per_vertex[j];
}

Rational order_m_trace(const UniformHypergraph& h) {
  const std::size_t m = h.uniformity();
  const std::size_t n = h.vertex_count();
  if (h.empty()) return 0;
  return Rational(ipow(Integer(m), m - 1) * ipow(Integer(m - 1), n - m) * static_cast<unsigned long>(h.edge_count()));
}

}  // namespace hyperee
