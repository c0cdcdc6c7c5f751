#include "hyperee/estrada.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hyperee/errors.hpp"

namespace hyperee {

std::string to_string(EstradaResult::Method m) {
  switch (m) {
    case EstradaResult::Method::SpectrumSum:
      return "spectrum-sum";
    case EstradaResult::Method::TraceSeries:
      return "trace-series";
    case EstradaResult::Method::SymmetricFormula:
      return "symmetric-formula";
    case EstradaResult::Method::HyperstarClosedForm:
      return "hyperstar-closed-form";
  }
  return "unknown";
}

EstradaResult ee_from_spectrum(const Spectrum& s) {
  std::complex<long double> sum(0);
  for (const auto& e : s.entries) {
    const std::complex<long double> z(e.value.real(), e.value.imag());
    sum += static_cast<long double>(e.multiplicity) * std::exp(z);
  }
  EstradaResult r;
  r.method = EstradaResult::Method::SpectrumSum;
  r.value = static_cast<double>(sum.real());
  r.imag_discard = static_cast<double>(std::abs(sum.imag()));
  r.error_bound = static_cast<double>(s.k) * std::exp(s.max_modulus()) * s.residual;
  if (r.imag_discard > 1e-8 * std::max(1.0, std::abs(r.value))) {
    throw std::runtime_error("spectrum sum has imaginary part " + std::to_string(r.imag_discard) +
                             "; the spectrum is not closed under conjugation");
  }
  return r;
}

double series_tail_bound(const Integer& k, double rho_hat, std::size_t max_order) {
  if (rho_hat <= 0) return 0.0;
  const long double logk = std::log(to_long_double(k));
  const long double next = static_cast<long double>(max_order + 1);
  return static_cast<double>(
      std::exp(logk + next * std::log(static_cast<long double>(rho_hat)) + rho_hat - std::lgamma(next + 1)));
}

EstradaResult ee_trace_series(const UniformHypergraph& h, double target_tol, double rho_hat,
                              const TraceBudget& budget) {
  if (!(target_tol > 0)) throw std::invalid_argument("ee_trace_series: target_tol must be positive");
  if (rho_hat < 0) throw std::invalid_argument("ee_trace_series: rho_hat must be nonnegative");
  const Integer k = eigenvalue_count(h.uniformity(), h.vertex_count());
  std::size_t order = 0;
  while (series_tail_bound(k, rho_hat, order) > target_tol) ++order;

  EstradaResult r;
  r.method = EstradaResult::Method::TraceSeries;
  TraceEngine engine(h, budget);
  Rational sum = 0;
  Integer fact = 1;
  std::size_t summed = 0;
  try {
    for (std::size_t d = 0; d <= order; ++d) {
      if (d > 0) fact *= static_cast<unsigned long>(d);
      const Rational t = engine.trace(d);
      if (t != 0) sum += t / fact;
      summed = d + 1;
    }
  } catch (const InfeasibleError& e) {
    r.converged = false;
    r.note = e.what();
  }
  r.terms_used = summed;
  r.value = to_double(sum);
  r.error_bound = series_tail_bound(k, rho_hat, summed - 1) + std::numeric_limits<double>::epsilon() * std::abs(r.value);
  return r;
}

namespace {

void check_orbit_count(const SymmetricSpectrum& s) {
  std::uint64_t reps = 0;
  for (const auto& e : s.representatives) reps += e.multiplicity;
  if (s.zero_multiplicity + s.m * reps != s.k) {
    throw std::invalid_argument("representatives inconsistent with k: n0 + m * " + std::to_string(reps) +
                                " != " + std::to_string(s.k));
  }
}

}  // namespace

EstradaResult ee_symmetric(const SymmetricSpectrum& s) {
  check_orbit_count(s);
  long double sum = static_cast<long double>(s.zero_multiplicity);
  const long double m = static_cast<long double>(s.m);
  for (const auto& rep : s.representatives) {
    const long double a = rep.value.real();
    const long double b = rep.value.imag();
    long double orbit = 0;
    for (std::size_t r = 1; r <= s.m; ++r) {
      const long double t = 2 * std::numbers::pi_v<long double> * static_cast<long double>(r) / m;
      orbit += std::exp(a * std::cos(t) - b * std::sin(t)) * std::cos(b * std::cos(t) + a * std::sin(t));
    }
    sum += static_cast<long double>(rep.multiplicity) * orbit;
  }
  EstradaResult r;
  r.method = EstradaResult::Method::SymmetricFormula;
  r.value = static_cast<double>(sum);
  return r;
}

EstradaResult ee_symmetric_m3(const SymmetricSpectrum& s) {
  if (s.m != 3) throw std::invalid_argument("ee_symmetric_m3 needs m = 3");
  check_orbit_count(s);
  const long double h3 = std::sqrt(3.0L) / 2;
  long double sum = static_cast<long double>(s.zero_multiplicity);
  for (const auto& rep : s.representatives) {
    const long double a = rep.value.real();
    const long double b = rep.value.imag();
    const long double pair = std::exp(-a / 2) * (std::cos(b / 2) * std::cos(h3 * a) * std::cosh(h3 * b) +
                                                 std::sin(b / 2) * std::sin(h3 * a) * std::sinh(-h3 * b));
    sum += 2 * static_cast<long double>(rep.multiplicity) * (pair + std::exp(a) * std::cos(b) / 2);
  }
  EstradaResult r;
  r.method = EstradaResult::Method::SymmetricFormula;
  r.value = static_cast<double>(sum);
  return r;
}

EstradaResult ee_symmetric_m4(const SymmetricSpectrum& s) {
  if (s.m != 4) throw std::invalid_argument("ee_symmetric_m4 needs m = 4");
  check_orbit_count(s);
  long double sum = static_cast<long double>(s.zero_multiplicity);
  for (const auto& rep : s.representatives) {
    const long double a = rep.value.real();
    const long double b = rep.value.imag();
    sum += 2 * static_cast<long double>(rep.multiplicity) * (std::cos(a) * std::cosh(b) + std::cos(b) * std::cosh(a));
  }
  EstradaResult r;
  r.method = EstradaResult::Method::SymmetricFormula;
  r.value = static_cast<double>(sum);
  return r;
}

EstradaResult ee_hyperstar(std::size_t m, std::size_t q) {
  if (m < 2 || q < 1) throw std::invalid_argument("ee_hyperstar needs m >= 2 and q >= 1");
  // q(m-1)^{q(m-1)+1} - sum_r (m-1) c_r + sum_r sum_l c_r e^{r^{1/m} cos(2 l pi/m)} cos(r^{1/m} sin(2 l pi/m)),
  // with the r = 0 terms (each exactly c_0) folded into the integer part.
  Integer integral = Integer(q) * ipow(Integer(m - 1), q * (m - 1) + 1);
  for (std::size_t r = 0; r <= q; ++r) integral -= Integer(m - 1) * hyperstar_multiplicity(m, q, r);
  integral += Integer(m) * hyperstar_multiplicity(m, q, 0);

  long double sum = 0;
  const long double md = static_cast<long double>(m);
  for (std::size_t r = 1; r <= q; ++r) {
    const long double c = to_long_double(hyperstar_multiplicity(m, q, r));
    if (c == 0) continue;
    const long double root = std::pow(static_cast<long double>(r), 1 / md);
    long double orbit = 0;
    for (std::size_t l = 1; l <= m; ++l) {
      const long double t = 2 * static_cast<long double>(l) * std::numbers::pi_v<long double> / md;
      orbit += std::exp(root * std::cos(t)) * std::cos(root * std::sin(t));
    }
    sum += c * orbit;
  }
  EstradaResult res;
  res.method = EstradaResult::Method::HyperstarClosedForm;
  res.value = static_cast<double>(to_long_double(integral) + sum);
  return res;
}

EstradaResult ee_hyperstar_m3(std::size_t q) {
  if (q < 1) throw std::invalid_argument("ee_hyperstar_m3 needs q >= 1");
  // 2^{2q+1} q + sum_r C(q,r) 3^r (2 e^{-r^{1/3}/2} cos(sqrt(3) r^{1/3}/2) + e^{r^{1/3}} - 2)
  long double sum = to_long_double(Integer(Integer(q) * ipow(2, 2 * q + 1)));
  for (std::size_t r = 0; r <= q; ++r) {
    const long double w = to_long_double(Integer(binomial(q, r) * ipow(3, r)));
    const long double c = std::cbrt(static_cast<long double>(r));
    sum += w * (2 * std::exp(-c / 2) * std::cos(std::sqrt(3.0L) * c / 2) + std::exp(c) - 2);
  }
  EstradaResult res;
  res.method = EstradaResult::Method::HyperstarClosedForm;
  res.value = static_cast<double>(sum);
  return res;
}

EstradaResult ee_hyperstar_m4(std::size_t q) {
  if (q < 1) throw std::invalid_argument("ee_hyperstar_m4 needs q >= 1");
  // 3^{3q+1} q + sum_r C(q,r) 2^{4r} 11^{q-r} (2 cos r^{1/4} + e^{-r^{1/4}} + e^{r^{1/4}} - 3)
  long double sum = to_long_double(Integer(Integer(q) * ipow(3, 3 * q + 1)));
  for (std::size_t r = 0; r <= q; ++r) {
    const long double w = to_long_double(Integer(binomial(q, r) * ipow(2, 4 * r) * ipow(11, q - r)));
    const long double c = std::pow(static_cast<long double>(r), 0.25L);
    sum += w * (2 * std::cos(c) + std::exp(-c) + std::exp(c) - 3);
  }
  EstradaResult res;
  res.method = EstradaResult::Method::HyperstarClosedForm;
  res.value = static_cast<double>(sum);
  return res;
}

namespace {

long double order_m_term(const UniformHypergraph& h) {
  return to_long_double(order_m_trace(h) / Rational(factorial(h.uniformity())));
}

long double partial_exp(long double x, std::size_t terms) {
  long double s = 0;
  long double p = 1;
  for (std::size_t l = 1; l <= terms; ++l) {
    p *= x / static_cast<long double>(l);
    s += p;
  }
  return s;
}

}  // namespace

BasicBounds bounds_basic(const UniformHypergraph& h, const SpectralRadiusEstimate& rho) {
  const long double k = to_long_double(eigenvalue_count(h.uniformity(), h.vertex_count()));
  return {static_cast<double>(k + order_m_term(h)), static_cast<double>(k * std::exp(static_cast<long double>(rho.upper)))};
}

BoundsReport bounds_report(const UniformHypergraph& h, const SpectralRadiusEstimate& rho, const Spectrum* s) {
  BoundsReport b;
  b.rho_used = rho;
  const auto basic = bounds_basic(h, rho);
  b.lower_thm31 = basic.lower;
  b.upper_thm31 = basic.upper;

  const std::size_t m = h.uniformity();
  const long double k = to_long_double(eigenvalue_count(m, h.vertex_count()));
  const long double trm = order_m_term(h);
  const long double x = static_cast<long double>(rho.upper) * std::sqrt(2 * k);
  b.upper_cor33_1 = static_cast<double>(k - 1 + std::exp(x));
  b.upper_cor33_2 = static_cast<double>(k - 1 + std::exp(x) + trm -
                                        partial_exp(std::sqrt(2.0L) * static_cast<long double>(rho.upper), m));

  if (s != nullptr) {
    long double alpha2 = 0;
    for (const auto& e : s->entries) {
      alpha2 += static_cast<long double>(e.multiplicity) * e.value.real() * e.value.real();
    }
    const long double tr2 = to_long_double(trace_d(h, 2));
    const long double r = std::max(0.0L, 2 * alpha2 - tr2);
    const long double root = std::sqrt(r);
    b.r_value = static_cast<double>(r);
    b.upper_thm32_1 = static_cast<double>(k - 1 + std::exp(root));
    b.upper_thm32_2 = static_cast<double>(k - 1 + std::exp(root) + trm - partial_exp(root, m));
  }
  return b;
}

BoundsReport bounds_refined(const Spectrum& s, const UniformHypergraph& h) {
  return bounds_report(h, spectral_radius(AdjacencyTensor(h)), &s);
}

}  // namespace hyperee
