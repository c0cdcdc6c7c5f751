#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperee/exact.hpp"
#include "hyperee/hypergraph.hpp"
#include "hyperee/trace.hpp"

namespace hyperee {

/// Monic characteristic polynomial; coefficients[j] multiplies lambda^{k-j}.
struct CharPoly {
  std::size_t m = 0;
  std::size_t degree = 0;
  std::vector<Rational> coefficients;
};

struct SpectrumEntry {
  std::complex<double> value;
  std::uint64_t multiplicity = 0;
};

/// Eigenvalue multiset of an adjacency tensor.
struct Spectrum {
  enum class Provenance { ClosedFormHyperstar, NewtonRoots };

  std::size_t m = 0;
  std::uint64_t k = 0;
  std::vector<SpectrumEntry> entries;
  Provenance provenance = Provenance::NewtonRoots;
  /// Estimated root error for numeric spectra; 0 for closed forms.
  double residual = 0.0;

  std::uint64_t total_multiplicity() const;
  std::uint64_t zero_multiplicity(double tol = 1e-12) const;
  double max_modulus() const;
  /// Sum of mult * lambda^d.
  std::complex<double> power_sum(std::size_t d) const;
};

std::string to_string(Spectrum::Provenance p);

/// Newton's identities over Q. Needs traces Tr_1 .. Tr_k with k = n(m-1)^{n-1}.
CharPoly charpoly_from_traces(const TraceSequence& traces);

struct RootOptions {
  /// Convergence threshold for the relative Aberth step.
  double tol = 1e-14;
  /// Roots closer than cluster_radius * max(1, |lambda|) are merged.
  double cluster_radius = 1e-7;
  std::size_t max_iterations = 2000;
  /// Largest acceptable estimated root error.
  double max_residual = 1e-9;
};

/// All roots with multiplicities. Zero roots are deflated exactly, a polynomial in
/// lambda^g is solved in lambda^g, and multiplicities come from an exact square-free
/// decomposition before any floating point is involved.
Spectrum roots(const CharPoly& p, const RootOptions& opts = {});

/// Closed-form spectrum of the m-uniform hyperstar with q edges.
Spectrum hyperstar_spectrum(std::size_t m, std::size_t q);

/// c_r = C(q,r) (m^{m-2})^r ((m-1)^{m-1} - m^{m-2})^{q-r}: multiplicity of each of the m
/// eigenvalues of modulus r^{1/m} in the hyperstar spectrum.
Integer hyperstar_multiplicity(std::size_t m, std::size_t q, std::size_t r);

struct SpectrumOptions {
  /// Largest k = n(m-1)^{n-1} attempted through traces and Newton's identities.
  std::size_t max_degree = 128;
  bool prefer_closed_form = true;
  TraceBudget trace;
  RootOptions roots;
};

/// Closed form for hyperstars, otherwise traces -> characteristic polynomial -> roots.
/// Throws InfeasibleError when k exceeds opts.max_degree.
Spectrum spectrum(const UniformHypergraph& h, const SpectrumOptions& opts = {});

/// True iff multiplying every eigenvalue by e^{2 pi i / m} maps the multiset onto itself,
/// matching values within tol * max(1, |lambda|).
bool is_m_symmetric(const Spectrum& s, double tol = 1e-7);

/// One representative per rotation orbit of the nonzero eigenvalues of an m-symmetric spectrum.
struct SymmetricSpectrum {
  std::size_t m = 0;
  std::uint64_t k = 0;
  std::uint64_t zero_multiplicity = 0;
  std::vector<SpectrumEntry> representatives;
};

/// Throws std::invalid_argument when s is not m-symmetric.
SymmetricSpectrum symmetric_representatives(const Spectrum& s, double tol = 1e-7);

}  // namespace hyperee
