#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

namespace hyperee {

template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

/// Value and derivative of the polynomial with ascending coefficients at z (Horner).
template <typename Real>
std::pair<std::complex<Real>, std::complex<Real>> horner(const ComplexVector<Real>& ascending,
                                                         std::complex<Real> z) {
  std::complex<Real> p(0), dp(0);
  for (Eigen::Index i = ascending.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + ascending(i);
  }
  return {p, dp};
}

template <typename Real>
struct AberthResult {
  ComplexVector<Real> roots;
  /// Largest final Newton correction |p/p'|, an estimate of the root error.
  Real residual = 0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// All roots of a polynomial given by ascending coefficients (leading coefficient nonzero)
/// by Aberth-Ehrlich simultaneous iteration. Starts from a circle of radius
/// 1 + max|a_i / a_n|. Suited to simple roots; clustered roots converge linearly.
template <typename Real>
AberthResult<Real> aberth_ehrlich(const ComplexVector<Real>& ascending, Real tol, std::size_t max_iterations) {
  using C = std::complex<Real>;
  const Eigen::Index n = ascending.size() - 1;
  AberthResult<Real> out;
  out.roots.resize(n);
  if (n <= 0) {
    out.converged = true;
    return out;
  }
  const ComplexVector<Real> a = ascending / ascending(n);
  Real radius = 0;
  for (Eigen::Index i = 0; i < n; ++i) radius = std::max(radius, std::abs(a(i)));
  radius += 1;
  const Real two_pi = 2 * std::numbers::pi_v<Real>;
  for (Eigen::Index k = 0; k < n; ++k) {
    out.roots(k) = std::polar(radius, two_pi * static_cast<Real>(k) / static_cast<Real>(n) + Real(0.4));
  }

  ComplexVector<Real> step(n);
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    Real worst = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
      const C z = out.roots(k);
      const auto [p, dp] = horner<Real>(a, z);
      if (p == C(0)) {
        step(k) = 0;
        continue;
      }
      const C newton = p / dp;
      C repulsion(0);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j != k) repulsion += C(1) / (z - out.roots(j));
      }
      step(k) = newton / (C(1) - newton * repulsion);
      out.roots(k) -= step(k);
      worst = std::max(worst, std::abs(step(k)) / std::max(Real(1), std::abs(out.roots(k))));
    }
    out.iterations = it;
    if (worst <= tol) {
      out.converged = true;
      break;
    }
  }

  // Final Newton polish; its correction size is the reported residual.
  out.residual = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    for (int pass = 0; pass < 2; ++pass) {
      const auto [p, dp] = horner<Real>(a, out.roots(k));
      if (p == C(0) || dp == C(0)) break;
      const C corr = p / dp;
      out.roots(k) -= corr;
      if (pass == 1) out.residual = std::max(out.residual, std::abs(corr));
    }
  }
  return out;
}

}  // namespace hyperee
