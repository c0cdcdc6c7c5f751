#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "hyperee/hypergraph.hpp"

namespace corpus {

struct Instance {
  std::string name;
  hyperee::UniformHypergraph h;
};

inline std::vector<hyperee::Edge> all_edges(std::size_t m, std::size_t n) {
  std::vector<hyperee::Edge> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(m), true);
  do {
    hyperee::Edge e;
    for (std::size_t v = 0; v < n; ++v) {
      if (pick[v]) e.push_back(static_cast<hyperee::Vertex>(v));
    }
    out.push_back(e);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// Random m-uniform hypergraph on n vertices with the given number of distinct edges.
inline hyperee::UniformHypergraph random_hypergraph(std::size_t m, std::size_t n, std::size_t edges, std::mt19937& rng) {
  auto pool = all_edges(m, n);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(edges, pool.size()));
  return hyperee::UniformHypergraph(m, n, pool);
}

/// Small instances, m in {2,3,4}, n <= 7, sparse enough that the trace series converges in seconds.
inline std::vector<Instance> instances() {
  using namespace hyperee;
  std::vector<Instance> out;
  out.push_back({"empty(2,3)", gen_empty(2, 3)});
  out.push_back({"empty(3,3)", gen_empty(3, 3)});
  out.push_back({"empty(4,4)", gen_empty(4, 4)});
  for (std::size_t q : {1, 2, 3, 4, 6}) out.push_back({"star(2," + std::to_string(q) + ")", gen_hyperstar(2, q)});
  for (std::size_t q : {1, 2, 3}) out.push_back({"star(3," + std::to_string(q) + ")", gen_hyperstar(3, q)});
  for (std::size_t q : {1, 2}) out.push_back({"star(4," + std::to_string(q) + ")", gen_hyperstar(4, q)});
  for (std::size_t p : {3, 5}) out.push_back({"path(2," + std::to_string(p) + ")", gen_hyperpath(2, p)});
  out.push_back({"path(3,3)", gen_hyperpath(3, 3)});
  out.push_back({"cycle(2,5)", UniformHypergraph(2, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})});
  out.push_back({"loose-cycle(3,6)", UniformHypergraph(3, 6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}})});
  out.push_back({"sunflower-pair(3,4)", UniformHypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}})});
  out.push_back({"two-edges(3,6)", UniformHypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})});

  std::mt19937 rng(20240611);
  struct Shape {
    std::size_t m, n, edges;
  };
  const Shape shapes[] = {{2, 5, 4}, {2, 6, 7}, {2, 7, 6}, {2, 4, 5}, {3, 4, 2}, {3, 5, 2},
                          {3, 6, 2}, {3, 5, 3}, {4, 5, 1}, {4, 5, 2}, {4, 6, 2}, {4, 7, 2}};
  int i = 0;
  for (const auto& s : shapes) {
    out.push_back({"random" + std::to_string(i++) + "(" + std::to_string(s.m) + "," + std::to_string(s.n) + ")",
                   random_hypergraph(s.m, s.n, s.edges, rng)});
  }
  return out;
}

}  // namespace corpus
