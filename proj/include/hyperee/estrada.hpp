#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "hyperee/hypergraph.hpp"
#include "hyperee/spectrum.hpp"
#include "hyperee/tensor.hpp"
#include "hyperee/trace.hpp"

namespace hyperee {

/// Estrada index EE(H) = sum_i e^{lambda_i} over all k eigenvalues of the adjacency tensor.
struct EstradaResult {
  enum class Method { SpectrumSum, TraceSeries, SymmetricFormula, HyperstarClosedForm };

  double value = 0.0;
  Method method = Method::SpectrumSum;
  /// Certified for the trace series, propagated from the root residual for spectrum sums,
  /// 0 for closed forms.
  double error_bound = 0.0;
  /// Series terms Tr_0 .. Tr_{terms_used-1}; 0 for other methods.
  std::size_t terms_used = 0;
  /// |Im| of the complex sum before it was dropped.
  double imag_discard = 0.0;
  /// False when the trace budget stopped the series short of the requested tolerance.
  bool converged = true;
  std::string note;
};

std::string to_string(EstradaResult::Method m);

/// Throws std::runtime_error if the imaginary residue exceeds 1e-8 max(1, EE).
EstradaResult ee_from_spectrum(const Spectrum& s);

/// Certified tail of the truncated series: k rho^{D+1} e^{rho} / (D+1)!.
double series_tail_bound(const Integer& k, double rho_hat, std::size_t max_order);

/// sum_{d<=D} Tr_d / d! with D the smallest order whose certified tail is <= target_tol.
/// rho_hat must bound the spectral radius from above. If the trace budget runs out the
/// partial sum is returned with converged = false and the tail bound of what was summed.
EstradaResult ee_trace_series(const UniformHypergraph& h, double target_tol, double rho_hat,
                              const TraceBudget& budget = {});

/// EE of an m-symmetric spectrum from one representative per rotation orbit.
/// Throws std::invalid_argument when n0 + m * (representative multiplicities) != k.
EstradaResult ee_symmetric(const SymmetricSpectrum& s);
/// The same sum with the m = 3 rotations expanded into real arithmetic.
EstradaResult ee_symmetric_m3(const SymmetricSpectrum& s);
/// The same sum with the m = 4 rotations expanded into real arithmetic.
EstradaResult ee_symmetric_m4(const SymmetricSpectrum& s);

/// Closed form for the m-uniform hyperstar with q edges.
EstradaResult ee_hyperstar(std::size_t m, std::size_t q);
EstradaResult ee_hyperstar_m3(std::size_t q);
EstradaResult ee_hyperstar_m4(std::size_t q);

struct BasicBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// k + Tr_m / m! <= EE <= k e^{rho}, using rho.upper.
BasicBounds bounds_basic(const UniformHypergraph& h, const SpectralRadiusEstimate& rho);

struct BoundsReport {
  double lower_thm31 = 0.0;
  double upper_thm31 = 0.0;
  /// k - 1 + e^{sqrt r}; needs a spectrum.
  std::optional<double> upper_thm32_1;
  /// upper_thm32_1 + Tr_m / m! - sum_{l=1}^{m} r^{l/2} / l!; needs a spectrum.
  std::optional<double> upper_thm32_2;
  /// k - 1 + e^{rho sqrt(2k)}.
  double upper_cor33_1 = 0.0;
  /// upper_cor33_1 + Tr_m / m! - sum_{l=1}^{m} (sqrt(2) rho)^l / l!.
  double upper_cor33_2 = 0.0;
  /// r = 2 sum_j alpha_j^2 - Tr_2, the sum of |lambda_j|^2.
  std::optional<double> r_value;
  SpectralRadiusEstimate rho_used;
};

BoundsReport bounds_report(const UniformHypergraph& h, const SpectralRadiusEstimate& rho,
                           const Spectrum* s = nullptr);
/// bounds_report with rho from power iteration and the spectrum-dependent bounds filled in.
BoundsReport bounds_refined(const Spectrum& s, const UniformHypergraph& h);

}  // namespace hyperee
