#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hyperee {

/// Vertex index. 0-based in the library; the text format and user-facing output are 1-based.
using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

/// Number of edges containing each vertex.
struct VertexDegreeProfile {
  std::vector<std::size_t> degrees;

  std::size_t max() const;
  std::size_t total() const;
};

/// An m-uniform hypergraph on n vertices.
///
/// Edges are sorted vertex tuples held in a sorted set, so two hypergraphs with the same
/// labelled edge set compare equal regardless of input order. Isolated vertices are part
/// of the data: n is never inferred from the edges.
class UniformHypergraph {
 public:
  /// Throws std::invalid_argument on m < 2, n < 1, wrong arity, out-of-range or repeated
  /// vertices, and duplicate edges.
  UniformHypergraph(std::size_t m, std::size_t n, std::vector<Edge> edges = {});

  std::size_t uniformity() const noexcept { return m_; }
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool empty() const noexcept { return edges_.empty(); }

  /// Indices (into edges()) of the edges containing v.
  const std::vector<std::size_t>& incident_edges(Vertex v) const { return incidence_.at(v); }

  friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

UniformHypergraph parse_hypergraph(std::string_view text);
std::string serialize(const UniformHypergraph& h);

UniformHypergraph read_hypergraph_file(const std::string& path);

/// q edges sharing only vertex 1 (index 0); n = q(m-1)+1.
UniformHypergraph gen_hyperstar(std::size_t m, std::size_t q);
/// Loose path of p edges; consecutive edges share exactly one vertex; n = p(m-1)+1.
UniformHypergraph gen_hyperpath(std::size_t m, std::size_t p);
UniformHypergraph gen_empty(std::size_t m, std::size_t n);

VertexDegreeProfile degrees(const UniformHypergraph& h);

/// Edge count q when h is a hyperstar on exactly q(m-1)+1 vertices; nullopt otherwise.
std::optional<std::size_t> hyperstar_edge_count(const UniformHypergraph& h);

/// Connected components over vertices that lie in at least one edge. Each component is
/// returned as an ascending vertex list; isolated vertices are omitted.
std::vector<std::vector<Vertex>> edge_components(const UniformHypergraph& h);

/// Sub-hypergraph induced on `vertices`, relabelled in the given order.
UniformHypergraph induced(const UniformHypergraph& h, const std::vector<Vertex>& vertices);

/// Disjoint union; the vertices of b are shifted past those of a.
UniformHypergraph disjoint_union(const UniformHypergraph& a, const UniformHypergraph& b);

/// Lexicographically smallest edge list over all vertex relabellings. Brute force over n!
/// permutations, so restricted to n <= 9.
std::vector<Edge> canonical_form(const UniformHypergraph& h);
bool isomorphic(const UniformHypergraph& a, const UniformHypergraph& b);

}  // namespace hyperee
