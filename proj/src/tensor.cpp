#include "hyperee/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hyperee {

double AdjacencyTensor::entry(std::span<const Vertex> index) const {
  if (index.size() != order()) throw std::invalid_argument("entry: index length must equal the tensor order");
  Edge e(index.begin(), index.end());
  std::sort(e.begin(), e.end());
  const auto& edges = h_->edges();
  if (!std::binary_search(edges.begin(), edges.end(), e)) return 0.0;
  return 1.0 / factorial(order() - 1).get_d();
}

Integer AdjacencyTensor::nonzero_count() const { return Integer(h_->edge_count()) * factorial(order()); }

std::string to_string(SpectralRadiusEstimate::Method m) {
  return m == SpectralRadiusEstimate::Method::PowerIteration ? "power-iteration" : "degree-bound";
}

namespace {

struct ComponentEnclosure {
  double lower;
  double upper;
  bool converged;
  std::size_t iterations;
};

ComponentEnclosure iterate_component(const UniformHypergraph& c, const PowerIterationOptions& opts) {
  const AdjacencyTensor t(c);
  const auto m1 = static_cast<double>(c.uniformity() - 1);
  Eigen::VectorXd x = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(c.vertex_count()));
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
    const Eigen::VectorXd xm = x.array().pow(m1);
    const Eigen::VectorXd y = hyperee::apply(t, x) + opts.shift * xm;
    const Eigen::ArrayXd ratio = y.array() / xm.array();
    // Every iterate gives a valid enclosure; keep the tightest seen.
    lo = std::max(lo, ratio.minCoeff() - opts.shift);
    hi = std::min(hi, ratio.maxCoeff() - opts.shift);
    if (hi - lo <= opts.tol * hi) return {lo, hi, true, it};
    x = y.array().pow(1.0 / m1);
    x /= x.maxCoeff();
  }
  return {lo, hi, false, opts.max_iterations};
}

}  // namespace

SpectralRadiusEstimate spectral_radius(const AdjacencyTensor& t, const PowerIterationOptions& opts) {
  if (!(opts.tol > 0)) throw std::invalid_argument("spectral_radius: tol must be positive");
  const auto& h = t.hypergraph();
  SpectralRadiusEstimate est;
  for (const auto& comp : edge_components(h)) {
    const UniformHypergraph sub = induced(h, comp);
    auto enc = iterate_component(sub, opts);
    est.iterations = std::max(est.iterations, enc.iterations);
    if (!enc.converged) {
      enc.upper = std::min(enc.upper, rho_upper_degree(sub));
      est.method = SpectralRadiusEstimate::Method::DegreeBound;
    }
    est.lower = std::max(est.lower, enc.lower);
    est.upper = std::max(est.upper, enc.upper);
  }
  // Absorb rounding in the ratio evaluation so the enclosure stays certified.
  constexpr double rel = 64 * std::numeric_limits<double>::epsilon();
  est.lower = std::max(0.0, est.lower * (1 - rel));
  est.upper = std::min(est.upper * (1 + rel), rho_upper_degree(h));
  if (est.upper < est.lower) est.upper = est.lower;
  return est;
}

double rho_upper_degree(const UniformHypergraph& h) { return static_cast<double>(degrees(h).max()); }

}  // namespace hyperee
