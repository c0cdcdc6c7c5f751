#include "hyperee/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hyperee/errors.hpp"

namespace hyperee {

std::size_t VertexDegreeProfile::max() const {
  return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
}

std::size_t VertexDegreeProfile::total() const {
  return std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
}

UniformHypergraph::UniformHypergraph(std::size_t m, std::size_t n, std::vector<Edge> edges)
    : m_(m), n_(n), edges_(std::move(edges)) {
  if (m_ < 2) throw std::invalid_argument("uniformity must be at least 2");
  if (n_ < 1) throw std::invalid_argument("vertex count must be at least 1");
  for (auto& e : edges_) {
    if (e.size() != m_) {
      throw std::invalid_argument("edge of arity " + std::to_string(e.size()) + " in a " + std::to_string(m_) +
                                  "-uniform hypergraph");
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw std::invalid_argument("edge repeats a vertex");
    if (e.back() >= n_) throw std::invalid_argument("vertex " + std::to_string(e.back() + 1) + " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  incidence_.assign(n_, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (Vertex v : edges_[i]) incidence_[v].push_back(i);
  }
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

UniformHypergraph parse_hypergraph(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto toks = split_ws(text.substr(pos, end - pos));
    if (!toks.empty() && toks.front().front() != '#') rows.emplace_back(line_no, std::move(toks));
    pos = end + 1;
  }
  if (rows.empty()) throw ParseError(line_no, "missing header 'm n q'");

  const auto& [hline, header] = rows.front();
  if (header.size() != 3) throw ParseError(hline, "header must be 'm n q'");
  const std::size_t m = parse_count(header[0], hline, "m");
  const std::size_t n = parse_count(header[1], hline, "n");
  const std::size_t q = parse_count(header[2], hline, "q");
  if (m < 2) throw ParseError(hline, "uniformity m must be at least 2");
  if (n < 1) throw ParseError(hline, "vertex count n must be at least 1");
  if (rows.size() - 1 < q) throw ParseError(line_no, "expected " + std::to_string(q) + " edges, found " + std::to_string(rows.size() - 1));
  if (rows.size() - 1 > q) throw ParseError(rows[q + 1].first, "more edge lines than the header's q = " + std::to_string(q));

  std::vector<Edge> edges;
  edges.reserve(q);
  std::set<Edge> seen;
  for (std::size_t r = 1; r <= q; ++r) {
    const auto& [ln, toks] = rows[r];
    if (toks.size() != m) {
      throw ParseError(ln, "edge has " + std::to_string(toks.size()) + " vertices, expected " + std::to_string(m));
    }
    Edge e;
    for (auto tok : toks) {
      const std::size_t v = parse_count(tok, ln, "vertex");
      if (v < 1 || v > n) throw ParseError(ln, "vertex " + std::string(tok) + " out of range [1, " + std::to_string(n) + "]");
      e.push_back(static_cast<Vertex>(v - 1));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ParseError(ln, "duplicate vertex within an edge");
    if (!seen.insert(e).second) throw ParseError(ln, "duplicate edge");
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(m, n, std::move(edges));
}

std::string serialize(const UniformHypergraph& h) {
  std::ostringstream os;
  os << h.uniformity() << ' ' << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i] + 1;
    os << '\n';
  }
  return os.str();
}

UniformHypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

UniformHypergraph gen_hyperstar(std::size_t m, std::size_t q) {
  if (m < 2 || q < 1) throw std::invalid_argument("hyperstar needs m >= 2 and q >= 1 (use gen_empty for q = 0)");
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t i = 0; i < q; ++i) {
    Edge e{0};
    for (std::size_t j = 1; j < m; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(m, q * (m - 1) + 1, std::move(edges));
}

UniformHypergraph gen_hyperpath(std::size_t m, std::size_t p) {
  if (m < 2 || p < 1) throw std::invalid_argument("hyperpath needs m >= 2 and p >= 1 (use gen_empty for p = 0)");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < p; ++i) {
    Edge e;
    for (std::size_t j = 0; j < m; ++j) e.push_back(static_cast<Vertex>(i * (m - 1) + j));
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(m, p * (m - 1) + 1, std::move(edges));
}

UniformHypergraph gen_empty(std::size_t m, std::size_t n) { return UniformHypergraph(m, n); }

VertexDegreeProfile degrees(const UniformHypergraph& h) {
  VertexDegreeProfile p;
  p.degrees.resize(h.vertex_count());
  for (Vertex v = 0; v < h.vertex_count(); ++v) p.degrees[v] = h.incident_edges(v).size();
  return p;
}

std::optional<std::size_t> hyperstar_edge_count(const UniformHypergraph& h) {
  const std::size_t q = h.edge_count();
  const std::size_t m = h.uniformity();
  if (q == 0 || h.vertex_count() != q * (m - 1) + 1) return std::nullopt;
  const auto deg = degrees(h).degrees;
  // A center lies in every edge; every other vertex lies in exactly one.
  for (Vertex c = 0; c < h.vertex_count(); ++c) {
    if (deg[c] != q) continue;
    bool ok = true;
    for (Vertex v = 0; v < h.vertex_count() && ok; ++v) ok = (v == c) || deg[v] == 1;
    if (ok) return q;
  }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> edge_components(const UniformHypergraph& h) {
  const std::size_t n = h.vertex_count();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : h.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = find(e[0]);
  }
  std::vector<std::vector<Vertex>> by_root(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!h.incident_edges(v).empty()) by_root[find(v)].push_back(v);
  }
  std::vector<std::vector<Vertex>> out;
  for (auto& c : by_root) {
    if (!c.empty()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

UniformHypergraph induced(const UniformHypergraph& h, const std::vector<Vertex>& vertices) {
  std::vector<std::int64_t> relabel(h.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) relabel.at(vertices[i]) = static_cast<std::int64_t>(i);
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    Edge f;
    for (Vertex v : e) {
      if (relabel[v] < 0) break;
      f.push_back(static_cast<Vertex>(relabel[v]));
    }
    if (f.size() == e.size()) edges.push_back(std::move(f));
  }
  return UniformHypergraph(h.uniformity(), vertices.size(), std::move(edges));
}

UniformHypergraph disjoint_union(const UniformHypergraph& a, const UniformHypergraph& b) {
  if (a.uniformity() != b.uniformity()) throw std::invalid_argument("disjoint union of different uniformities");
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (auto e : b.edges()) {
    for (auto& v : e) v += shift;
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(a.uniformity(), a.vertex_count() + b.vertex_count(), std::move(edges));
}

std::vector<Edge> canonical_form(const UniformHypergraph& h) {
  const std::size_t n = h.vertex_count();
  if (n > 9) throw std::invalid_argument("canonical_form is brute force and limited to n <= 9");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<Edge> best;
  bool first = true;
  do {
    std::vector<Edge> relabelled;
    relabelled.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
      Edge f;
      for (Vertex v : e) f.push_back(perm[v]);
      std::sort(f.begin(), f.end());
      relabelled.push_back(std::move(f));
    }
    std::sort(relabelled.begin(), relabelled.end());
    if (first || relabelled < best) {
      best = std::move(relabelled);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const UniformHypergraph& a, const UniformHypergraph& b) {
  if (a.uniformity() != b.uniformity() || a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

}  // namespace hyperee
