#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include "hyperee/exact.hpp"
#include "hyperee/hypergraph.hpp"

namespace hyperee {

/// Adjacency tensor of an m-uniform hypergraph: h_{i1..im} = 1/(m-1)! when {i1..im} is an
/// edge, 0 otherwise. Entries are implied by the edge set; nothing of size n^m is stored.
/// The view borrows the hypergraph, which must outlive it.
class AdjacencyTensor {
 public:
  explicit AdjacencyTensor(const UniformHypergraph& h) : h_(&h) {}

  const UniformHypergraph& hypergraph() const noexcept { return *h_; }
  std::size_t order() const noexcept { return h_->uniformity(); }
  std::size_t dimension() const noexcept { return h_->vertex_count(); }

  /// Entry at a 0-based index tuple of length m.
  double entry(std::span<const Vertex> index) const;

  /// |E| * m!
  Integer nonzero_count() const;

 private:
  const UniformHypergraph* h_;
};

/// T x^{m-1}: component i is the sum over edges e containing i of the product of x_v for
/// v in e \ {i}. The (m-1)! orderings of each tail cancel the 1/(m-1)! weight.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> apply(const AdjacencyTensor& t,
                                                                  const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const auto& h = t.hypergraph();
  if (static_cast<std::size_t>(x.size()) != h.vertex_count()) {
    throw std::invalid_argument("apply: vector length " + std::to_string(x.size()) + " does not match dimension " +
                                std::to_string(h.vertex_count()));
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> y = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(x.size());
  for (const auto& e : h.edges()) {
    for (Vertex i : e) {
      Scalar prod(1);
      for (Vertex v : e) {
        if (v != i) prod *= x(v);
      }
      y(i) += prod;
    }
  }
  return y;
}

struct SpectralRadiusEstimate {
  enum class Method { PowerIteration, DegreeBound };

  double lower = 0.0;
  double upper = 0.0;
  Method method = Method::PowerIteration;
  std::size_t iterations = 0;

  bool encloses(double rho, double slack = 0.0) const { return lower - slack <= rho && rho <= upper + slack; }
};

std::string to_string(SpectralRadiusEstimate::Method m);

struct PowerIterationOptions {
  double tol = 1e-10;
  std::size_t max_iterations = 10000;
  double shift = 1.0;
};

/// Certified enclosure of the spectral radius by shifted power iteration with
/// Collatz-Wielandt min/max ratios, run per connected component. Components that do not
/// converge fall back to their maximum degree and tag the result DegreeBound.
SpectralRadiusEstimate spectral_radius(const AdjacencyTensor& t, const PowerIterationOptions& opts = {});

/// Maximum vertex degree; the row-sum bound on rho.
double rho_upper_degree(const UniformHypergraph& h);

}  // namespace hyperee
