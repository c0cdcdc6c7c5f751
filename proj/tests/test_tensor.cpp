#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "corpus.hpp"
#include "hyperee/tensor.hpp"
#include "oracles.hpp"

using namespace hyperee;

namespace {

/// Visits every index tuple in [n]^m.
template <class F>
void for_each_index(std::size_t m, std::size_t n, F&& f) {
  std::vector<Vertex> idx(m, 0);
  while (true) {
    f(std::span<const Vertex>(idx));
    std::size_t p = m;
    while (p > 0 && ++idx[p - 1] == n) idx[--p] = 0;
    if (p == 0) return;
  }
}

}  // namespace

TEST_CASE("entries of a single 3-uniform edge") {
  const auto h = gen_hyperpath(3, 1);
  const AdjacencyTensor t(h);
  const Vertex a[] = {0, 1, 2};
  const Vertex b[] = {2, 0, 1};
  const Vertex c[] = {0, 0, 1};
  const Vertex d[] = {1, 1, 1};
  CHECK(t.entry(a) == doctest::Approx(0.5));
  CHECK(t.entry(b) == doctest::Approx(0.5));
  CHECK(t.entry(c) == 0.0);
  CHECK(t.entry(d) == 0.0);
  CHECK(t.nonzero_count() == 6);
}

TEST_CASE("tensor is symmetric with |E| m! nonzeros") {
  for (const auto& inst : corpus::instances()) {
    CAPTURE(inst.name);
    const AdjacencyTensor t(inst.h);
    const std::size_t m = inst.h.uniformity();
    Integer nonzero = 0;
    bool symmetric = true;
    for_each_index(m, inst.h.vertex_count(), [&](std::span<const Vertex> idx) {
      const double v = t.entry(idx);
      if (v != 0) {
        ++nonzero;
        CHECK(v == doctest::Approx(1.0 / to_double(Rational(factorial(m - 1)))));
      }
      std::vector<Vertex> rev(idx.rbegin(), idx.rend());
      symmetric = symmetric && t.entry(rev) == v;
    });
    CHECK(symmetric);
    CHECK(nonzero == t.nonzero_count());
  }
}

TEST_CASE("apply agrees with the entrywise contraction") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const auto& inst : corpus::instances()) {
    CAPTURE(inst.name);
    const AdjacencyTensor t(inst.h);
    const std::size_t n = inst.h.vertex_count();
    const std::size_t m = inst.h.uniformity();
    Eigen::VectorXd x(n);
    for (auto& v : x) v = u(rng);
    Eigen::VectorXd expected = Eigen::VectorXd::Zero(n);
    for_each_index(m, n, [&](std::span<const Vertex> idx) {
      const double v = t.entry(idx);
      if (v == 0) return;
      double prod = v;
      for (std::size_t p = 1; p < m; ++p) prod *= x(idx[p]);
      expected(idx[0]) += prod;
    });
    CHECK((hyperee::apply(t, x) - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("apply is generic in the scalar type") {
  const auto h = gen_hyperstar(3, 2);
  const AdjacencyTensor t(h);
  Eigen::Matrix<std::complex<double>, Eigen::Dynamic, 1> x(5);
  x << std::complex<double>(1, 1), 2, 3, 4, 5;
  const auto y = hyperee::apply(t, x);
  CHECK(std::abs(y(0) - std::complex<double>(26, 0)) < 1e-12);
  CHECK(std::abs(y(1) - std::complex<double>(3, 3)) < 1e-12);
  Eigen::Matrix<long double, Eigen::Dynamic, 1> z = Eigen::Matrix<long double, Eigen::Dynamic, 1>::Ones(5);
  CHECK(hyperee::apply(t, z)(0) == 2.0L);
  CHECK_THROWS_AS(hyperee::apply(t, Eigen::VectorXd::Ones(4)), std::invalid_argument);
}

TEST_CASE("spectral radius of hyperstars is q^{1/m}") {
  for (std::size_t m : {2, 3, 4}) {
    for (std::size_t q : {1, 2, 3, 5}) {
      CAPTURE(m);
      CAPTURE(q);
      const auto h = gen_hyperstar(m, q);
      const auto est = spectral_radius(AdjacencyTensor(h));
      const double rho = std::pow(static_cast<double>(q), 1.0 / static_cast<double>(m));
      CHECK(est.encloses(rho));
      CHECK(est.upper - est.lower < 1e-8);
      CHECK(est.method == SpectralRadiusEstimate::Method::PowerIteration);
    }
  }
}

TEST_CASE("spectral radius of graphs matches the matrix eigensolver") {
  for (const auto& inst : corpus::instances()) {
    if (inst.h.uniformity() != 2) continue;
    CAPTURE(inst.name);
    const double rho = oracle::graph_eigenvalues(inst.h).cwiseAbs().maxCoeff();
    const auto est = spectral_radius(AdjacencyTensor(inst.h));
    CHECK(est.encloses(rho, 1e-12));
    CHECK(est.upper - est.lower < 1e-7);
  }
}

TEST_CASE("spectral radius edge cases") {
  const auto e = gen_empty(3, 4);
  const auto est = spectral_radius(AdjacencyTensor(e));
  CHECK(est.lower == 0.0);
  CHECK(est.upper == 0.0);
  CHECK(rho_upper_degree(gen_hyperstar(3, 4)) == 4.0);

  const UniformHypergraph two(3, 7, {{0, 1, 2}, {3, 4, 5}, {3, 4, 6}});
  const auto both = spectral_radius(AdjacencyTensor(two));
  const auto big = spectral_radius(AdjacencyTensor(UniformHypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}})));
  CHECK(both.lower == doctest::Approx(big.lower).epsilon(1e-9));
  CHECK(both.upper == doctest::Approx(big.upper).epsilon(1e-9));
  CHECK(both.lower > 1.0);

  PowerIterationOptions starved;
  starved.max_iterations = 1;
  const auto rough = spectral_radius(AdjacencyTensor(gen_hyperpath(3, 3)), starved);
  const auto fine = spectral_radius(AdjacencyTensor(gen_hyperpath(3, 3)));
  CHECK(rough.lower <= fine.lower + 1e-12);
  CHECK(rough.upper >= fine.upper - 1e-12);
  CHECK(rough.upper <= 2.0);
  CHECK(to_string(SpectralRadiusEstimate::Method::DegreeBound) == "degree-bound");
}

TEST_CASE("enclosure invariants hold on the corpus") {
  for (const auto& inst : corpus::instances()) {
    CAPTURE(inst.name);
    const auto est = spectral_radius(AdjacencyTensor(inst.h));
    CHECK(0.0 <= est.lower);
    CHECK(est.lower <= est.upper);
    CHECK(est.upper <= rho_upper_degree(inst.h));
  }
}
