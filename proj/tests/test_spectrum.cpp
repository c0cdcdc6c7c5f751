#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "corpus.hpp"
#include "hyperee/errors.hpp"
#include "hyperee/polynomial.hpp"
#include "hyperee/spectrum.hpp"
#include "hyperee/tensor.hpp"
#include "oracles.hpp"

using namespace hyperee;

namespace {

using C = std::complex<double>;

/// Multiplicity of the entry within tol of z, 0 if none.
std::uint64_t mult_at(const Spectrum& s, C z, double tol = 1e-9) {
  for (const auto& e : s.entries) {
    if (std::abs(e.value - z) <= tol) return e.multiplicity;
  }
  return 0;
}

Spectrum newton_spectrum(const UniformHypergraph& h) {
  SpectrumOptions o;
  o.prefer_closed_form = false;
  return spectrum(h, o);
}

bool same_multiset(const Spectrum& a, const Spectrum& b, double tol) {
  if (a.entries.size() != b.entries.size()) return false;
  for (const auto& e : a.entries) {
    if (mult_at(b, e.value, tol) != e.multiplicity) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("characteristic polynomial of a single 3-uniform edge") {
  const auto p = charpoly_from_traces(trace_sequence(gen_hyperpath(3, 1), 12));
  // lambda^3 (lambda^3 - 1)^3
  std::vector<Rational> expected(13, 0);
  expected[0] = 1;
  expected[3] = -3;
  expected[6] = 3;
  expected[9] = -1;
  CHECK(p.degree == 12);
  CHECK(p.coefficients == expected);
  CHECK_THROWS_AS(charpoly_from_traces(trace_sequence(gen_hyperpath(3, 1), 11)), std::invalid_argument);
}

TEST_CASE("empty hypergraph spectrum is all zeros") {
  const auto p = charpoly_from_traces(trace_sequence(gen_empty(3, 3), 12));
  CHECK(p.coefficients[0] == 1);
  for (std::size_t j = 1; j <= 12; ++j) CHECK(p.coefficients[j] == 0);
  const auto s = spectrum(gen_empty(3, 3));
  REQUIRE(s.entries.size() == 1);
  CHECK(s.entries[0].value == C(0, 0));
  CHECK(s.entries[0].multiplicity == 12);
  CHECK(s.zero_multiplicity() == 12);
}

TEST_CASE("single 3-uniform edge spectrum from traces") {
  const auto s = newton_spectrum(gen_hyperpath(3, 1));
  CHECK(s.provenance == Spectrum::Provenance::NewtonRoots);
  CHECK(s.k == 12);
  CHECK(s.entries.size() == 4);
  const double h = std::sqrt(3.0) / 2;
  CHECK(mult_at(s, {0, 0}, 1e-8) == 3);
  CHECK(mult_at(s, {1, 0}, 1e-8) == 3);
  CHECK(mult_at(s, {-0.5, h}, 1e-8) == 3);
  CHECK(mult_at(s, {-0.5, -h}, 1e-8) == 3);
  CHECK(s.residual < 1e-12);
}

TEST_CASE("hyperstar closed form") {
  const auto s = hyperstar_spectrum(3, 2);
  CHECK(s.k == 80);
  CHECK(s.total_multiplicity() == 80);
  CHECK(s.zero_multiplicity() == 35);
  CHECK(mult_at(s, {1, 0}) == 6);
  CHECK(mult_at(s, {std::cbrt(2.0), 0}) == 9);
  CHECK(hyperstar_spectrum(4, 1).zero_multiplicity() == 44);
  for (std::size_t m : {2, 3, 4}) {
    for (std::size_t q = 1; q <= 4; ++q) {
      for (std::size_t r = 0; r <= q; ++r) CHECK(hyperstar_multiplicity(m, q, r) == oracle::star_multiplicity(m, q, r));
    }
  }
  const auto star2 = hyperstar_spectrum(2, 4);
  CHECK(mult_at(star2, {2, 0}) == 1);
  CHECK(mult_at(star2, {-2, 0}) == 1);
  CHECK(star2.zero_multiplicity() == 3);
}

TEST_CASE("closed form and root finding agree on hyperstars") {
  const std::pair<std::size_t, std::size_t> cases[] = {{2, 3}, {2, 6}, {3, 1}, {3, 2}, {4, 1}};
  for (const auto& [m, q] : cases) {
    CAPTURE(m);
    CAPTURE(q);
    const auto closed = hyperstar_spectrum(m, q);
    const auto numeric = newton_spectrum(gen_hyperstar(m, q));
    CHECK(closed.provenance == Spectrum::Provenance::ClosedFormHyperstar);
    CHECK(numeric.provenance == Spectrum::Provenance::NewtonRoots);
    CHECK(same_multiset(closed, numeric, 1e-9));
  }
}

TEST_CASE("graph spectra match the symmetric eigensolver") {
  for (const auto& inst : corpus::instances()) {
    if (inst.h.uniformity() != 2) continue;
    CAPTURE(inst.name);
    const auto s = newton_spectrum(inst.h);
    const auto ev = oracle::graph_eigenvalues(inst.h);
    std::vector<double> got;
    for (const auto& e : s.entries) {
      CHECK(std::abs(e.value.imag()) < 1e-9);
      for (std::uint64_t i = 0; i < e.multiplicity; ++i) got.push_back(e.value.real());
    }
    std::sort(got.begin(), got.end());
    REQUIRE(got.size() == static_cast<std::size_t>(ev.size()));
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(ev(static_cast<long>(i))).epsilon(1e-9));
  }
}

TEST_CASE("computed spectra satisfy the structural invariants") {
  for (const auto& inst : corpus::instances()) {
    const std::size_t m = inst.h.uniformity();
    if (eigenvalue_count(m, inst.h.vertex_count()) > 128) continue;
    CAPTURE(inst.name);
    const auto s = spectrum(inst.h);
    CHECK(s.total_multiplicity() == s.k);
    const auto traces = trace_sequence(inst.h, std::min<std::uint64_t>(s.k, 12));
    const double rho = s.max_modulus();
    for (std::size_t d = 1; d < traces.values.size(); ++d) {
      CAPTURE(d);
      const C ps = s.power_sum(d);
      const double tol = static_cast<double>(s.k) * std::pow(1 + rho, static_cast<double>(d)) * 1e-9;
      CHECK(std::abs(ps - C(to_double(traces.values[d]), 0)) <= tol);
    }
    for (const auto& e : s.entries) {
      if (e.value.imag() != 0) CHECK(mult_at(s, std::conj(e.value), 1e-8) == e.multiplicity);
    }
    const auto est = spectral_radius(AdjacencyTensor(inst.h));
    CHECK(est.encloses(rho, 1e-7));
  }
}

TEST_CASE("spectrum refuses instances above the degree budget") {
  SpectrumOptions o;
  o.max_degree = 100;
  CHECK_THROWS_AS(spectrum(gen_hyperpath(3, 3), o), InfeasibleError);
  CHECK_NOTHROW(spectrum(gen_hyperstar(3, 3), o));
  CHECK(spectrum(gen_hyperstar(3, 3), o).k == 448);
}

TEST_CASE("m-symmetry detection") {
  CHECK(is_m_symmetric(hyperstar_spectrum(3, 2)));
  CHECK(is_m_symmetric(spectrum(gen_empty(3, 3))));
  const auto triangle = newton_spectrum(UniformHypergraph(2, 3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(mult_at(triangle, {2, 0}, 1e-8) == 1);
  CHECK(mult_at(triangle, {-1, 0}, 1e-8) == 2);
  CHECK_FALSE(is_m_symmetric(triangle));
  CHECK_THROWS_AS(symmetric_representatives(triangle), std::invalid_argument);
}

TEST_CASE("symmetric representatives") {
  const auto reps = symmetric_representatives(hyperstar_spectrum(3, 2));
  CHECK(reps.m == 3);
  CHECK(reps.k == 80);
  CHECK(reps.zero_multiplicity == 35);
  REQUIRE(reps.representatives.size() == 2);
  std::uint64_t total = 0;
  for (const auto& r : reps.representatives) total += r.multiplicity;
  CHECK(reps.zero_multiplicity + 3 * total == reps.k);

  const auto e = symmetric_representatives(spectrum(gen_empty(3, 3)));
  CHECK(e.zero_multiplicity == 12);
  CHECK(e.representatives.empty());
  CHECK(to_string(Spectrum::Provenance::NewtonRoots) == "newton-roots");
}
