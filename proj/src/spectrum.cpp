#include "hyperee/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "hyperee/errors.hpp"
#include "hyperee/polynomial.hpp"
#include "hyperee/roots.hpp"

namespace hyperee {

std::uint64_t Spectrum::total_multiplicity() const {
  std::uint64_t t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

std::uint64_t Spectrum::zero_multiplicity(double tol) const {
  std::uint64_t t = 0;
  for (const auto& e : entries) {
    if (std::abs(e.value) <= tol) t += e.multiplicity;
  }
  return t;
}

double Spectrum::max_modulus() const {
  double r = 0.0;
  for (const auto& e : entries) r = std::max(r, std::abs(e.value));
  return r;
}

std::complex<double> Spectrum::power_sum(std::size_t d) const {
  std::complex<long double> s(0);
  for (const auto& e : entries) {
    std::complex<long double> z(e.value.real(), e.value.imag());
    std::complex<long double> p(1);
    for (std::size_t i = 0; i < d; ++i) p *= z;
    s += static_cast<long double>(e.multiplicity) * p;
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

std::string to_string(Spectrum::Provenance p) {
  return p == Spectrum::Provenance::ClosedFormHyperstar ? "closed-form-hyperstar" : "newton-roots";
}

CharPoly charpoly_from_traces(const TraceSequence& traces) {
  const std::size_t k = to_u64(eigenvalue_count(traces.m, traces.n));
  if (traces.values.size() < k + 1) {
    throw std::invalid_argument("charpoly_from_traces: need traces up to order " + std::to_string(k) + ", have " +
                                std::to_string(traces.max_order()));
  }
  // e_j = (1/j) sum_{i=1}^{j} (-1)^{i-1} e_{j-i} p_i
  std::vector<Rational> e(k + 1, 0);
  e[0] = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    Rational s = 0;
    for (std::size_t i = 1; i <= j; ++i) {
      if (traces.values[i] == 0) continue;
      const Rational term = e[j - i] * traces.values[i];
      if (i % 2 == 1) {
        s += term;
      } else {
        s -= term;
      }
    }
    e[j] = s / static_cast<unsigned long>(j);
  }
  CharPoly p{traces.m, k, std::vector<Rational>(k + 1)};
  for (std::size_t j = 0; j <= k; ++j) p.coefficients[j] = (j % 2 == 0) ? e[j] : Rational(-e[j]);
  return p;
}

namespace {

std::complex<double> snap(std::complex<long double> z) {
  const long double scale = std::max(1.0L, std::abs(z));
  long double re = z.real();
  long double im = z.imag();
  if (std::abs(im) <= 1e-12L * scale) im = 0;
  if (std::abs(re) <= 1e-12L * scale) re = 0;
  return {static_cast<double>(re), static_cast<double>(im)};
}

bool value_less(const SpectrumEntry& a, const SpectrumEntry& b) {
  if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
  return a.value.imag() < b.value.imag();
}

std::vector<SpectrumEntry> cluster(std::vector<SpectrumEntry> in, double radius) {
  std::vector<SpectrumEntry> out;
  for (const auto& e : in) {
    bool merged = false;
    for (auto& o : out) {
      if (std::abs(o.value - e.value) <= radius * std::max(1.0, std::abs(e.value))) {
        const double w0 = static_cast<double>(o.multiplicity);
        const double w1 = static_cast<double>(e.multiplicity);
        o.value = (o.value * w0 + e.value * w1) / (w0 + w1);
        o.multiplicity += e.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), value_less);
  return out;
}

}  // namespace

Spectrum roots(const CharPoly& p, const RootOptions& opts) {
  const std::size_t k = p.degree;
  if (k < 1 || p.coefficients.size() != k + 1 || p.coefficients[0] != 1) {
    throw std::invalid_argument("roots: expected a monic polynomial of degree >= 1");
  }
  Spectrum s;
  s.m = p.m;
  s.k = k;
  s.provenance = Spectrum::Provenance::NewtonRoots;

  std::size_t zeros = 0;
  while (zeros < k && p.coefficients[k - zeros] == 0) ++zeros;
  std::vector<SpectrumEntry> found;
  if (zeros > 0) found.push_back({{0.0, 0.0}, zeros});

  const std::size_t deg = k - zeros;
  if (deg > 0) {
    // Divide out lambda^zeros; the remaining polynomial may be one in lambda^g.
    std::size_t g = 0;
    for (std::size_t i = 1; i <= deg; ++i) {
      if (p.coefficients[deg - i] != 0) g = std::gcd(g, i);
    }
    std::vector<Rational> reduced(deg / g + 1);
    for (std::size_t i = 0; i <= deg / g; ++i) reduced[i] = p.coefficients[deg - g * i];

    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    for (const auto& [factor, mult] : square_free_decomposition(RationalPolynomial(reduced))) {
      const auto fdeg = static_cast<Eigen::Index>(factor.degree());
      std::vector<std::complex<long double>> mu_roots;
      long double mu_residual = 0;
      if (fdeg == 1) {
        mu_roots.emplace_back(to_long_double(-factor[0] / factor[1]), 0.0L);
        mu_residual = std::numeric_limits<double>::epsilon() * std::abs(mu_roots.back());
      } else {
        ComplexVector<long double> coeffs(fdeg + 1);
        for (Eigen::Index i = 0; i <= fdeg; ++i) coeffs(i) = to_long_double(factor[static_cast<std::size_t>(i)]);
        const auto res = aberth_ehrlich<long double>(coeffs, opts.tol, opts.max_iterations);
        if (!res.converged && res.residual > opts.max_residual) {
          throw RootFindingError("root iteration did not converge for a degree-" + std::to_string(fdeg) +
                                 " factor of the degree-" + std::to_string(k) + " polynomial; residual " +
                                 std::to_string(static_cast<double>(res.residual)));
        }
        mu_roots.assign(res.roots.begin(), res.roots.end());
        mu_residual = std::max<long double>(res.residual, std::numeric_limits<double>::epsilon());
      }
      for (const auto& mu : mu_roots) {
        const long double r = std::pow(std::abs(mu), 1.0L / static_cast<long double>(g));
        const long double theta = std::arg(mu) / static_cast<long double>(g);
        const long double disp = g == 1 ? mu_residual : mu_residual / (static_cast<long double>(g) * std::pow(r, static_cast<long double>(g - 1)));
        s.residual = std::max(s.residual, static_cast<double>(disp));
        for (std::size_t l = 0; l < g; ++l) {
          const auto lambda = std::polar(r, theta + two_pi * static_cast<long double>(l) / static_cast<long double>(g));
          found.push_back({snap(lambda), mult});
        }
      }
    }
  }
  if (s.residual > opts.max_residual) {
    throw RootFindingError("degree-" + std::to_string(k) + " polynomial: achieved residual " +
                           std::to_string(s.residual) + " exceeds " + std::to_string(opts.max_residual));
  }
  s.entries = cluster(std::move(found), opts.cluster_radius);
  return s;
}

Integer hyperstar_multiplicity(std::size_t m, std::size_t q, std::size_t r) {
  const Integer a = ipow(Integer(m), m - 2);
  const Integer b = ipow(Integer(m - 1), m - 1) - a;
  return binomial(q, r) * ipow(a, r) * ipow(b, q - r);
}

Spectrum hyperstar_spectrum(std::size_t m, std::size_t q) {
  if (m < 2 || q < 1) throw std::invalid_argument("hyperstar_spectrum needs m >= 2 and q >= 1");
  const std::size_t n = q * (m - 1) + 1;
  const Integer k = eigenvalue_count(m, n);
  Spectrum s;
  s.m = m;
  s.k = to_u64(k);
  s.provenance = Spectrum::Provenance::ClosedFormHyperstar;

  Integer nonzero = 0;
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  for (std::size_t r = 1; r <= q; ++r) {
    const Integer c = hyperstar_multiplicity(m, q, r);
    if (c == 0) continue;
    nonzero += c * static_cast<unsigned long>(m);
    const long double radius = std::pow(static_cast<long double>(r), 1.0L / static_cast<long double>(m));
    for (std::size_t l = 1; l <= m; ++l) {
      std::complex<long double> z;
      if (l == m) {
        z = radius;
      } else if (2 * l == m) {
        z = -radius;
      } else {
        z = std::polar(radius, two_pi * static_cast<long double>(l) / static_cast<long double>(m));
      }
      s.entries.push_back({snap(z), to_u64(c)});
    }
  }
  const Integer zero = k - nonzero;
  if (zero > 0) s.entries.push_back({{0.0, 0.0}, to_u64(zero)});
  std::sort(s.entries.begin(), s.entries.end(), value_less);
  return s;
}

Spectrum spectrum(const UniformHypergraph& h, const SpectrumOptions& opts) {
  const std::size_t m = h.uniformity();
  if (opts.prefer_closed_form) {
    if (auto q = hyperstar_edge_count(h)) return hyperstar_spectrum(m, *q);
  }
  const Integer k = eigenvalue_count(m, h.vertex_count());
  if (k > static_cast<unsigned long>(opts.max_degree)) {
    throw InfeasibleError("instance too large for full spectrum (k = " + k.get_str() + " > " +
                          std::to_string(opts.max_degree) + "); use ee_trace_series");
  }
  const auto traces = trace_sequence(h, to_u64(k), opts.trace);
  Spectrum s = roots(charpoly_from_traces(traces), opts.roots);
  s.m = m;
  return s;
}

namespace {

/// Removes `need` multiplicity near `target` from `remaining`; false if not enough is there.
bool consume(const std::vector<SpectrumEntry>& entries, std::vector<std::uint64_t>& remaining,
             std::complex<double> target, std::uint64_t need, double tol) {
  const double radius = tol * std::max(1.0, std::abs(target));
  std::vector<std::size_t> near;
  for (std::size_t j = 0; j < entries.size(); ++j) {
    if (remaining[j] > 0 && std::abs(entries[j].value - target) <= radius) near.push_back(j);
  }
  std::sort(near.begin(), near.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(entries[a].value - target) < std::abs(entries[b].value - target);
  });
  for (std::size_t j : near) {
    const std::uint64_t take = std::min(need, remaining[j]);
    remaining[j] -= take;
    need -= take;
    if (need == 0) return true;
  }
  return need == 0;
}

std::complex<double> rotation(std::size_t m, std::size_t l) {
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(m));
}

}  // namespace

bool is_m_symmetric(const Spectrum& s, double tol) {
  if (s.m < 2) throw std::invalid_argument("is_m_symmetric: spectrum has no uniformity");
  const auto omega = rotation(s.m, 1);
  std::vector<std::uint64_t> remaining;
  for (const auto& e : s.entries) remaining.push_back(e.multiplicity);
  for (const auto& e : s.entries) {
    if (!consume(s.entries, remaining, e.value * omega, e.multiplicity, tol)) return false;
  }
  return true;
}

SymmetricSpectrum symmetric_representatives(const Spectrum& s, double tol) {
  if (!is_m_symmetric(s, tol)) throw std::invalid_argument("spectrum is not m-symmetric");
  SymmetricSpectrum out;
  out.m = s.m;
  out.k = s.k;
  out.zero_multiplicity = s.zero_multiplicity(tol);
  if ((s.k - out.zero_multiplicity) % s.m != 0) {
    throw std::invalid_argument("nonzero eigenvalue count is not a multiple of m");
  }
  // Visit by argument so the representative is the orbit member nearest the positive axis.
  std::vector<std::size_t> order(s.entries.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto angle = [&](std::size_t i) {
    double a = std::arg(s.entries[i].value);
    return a < -1e-12 ? a + 2 * std::numbers::pi : std::max(a, 0.0);
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return angle(a) < angle(b); });

  std::vector<std::uint64_t> remaining;
  for (const auto& e : s.entries) remaining.push_back(e.multiplicity);
  for (std::size_t i : order) {
    const auto& e = s.entries[i];
    if (remaining[i] == 0 || std::abs(e.value) <= tol) continue;
    const std::uint64_t mult = remaining[i];
    remaining[i] = 0;
    out.representatives.push_back({e.value, mult});
    for (std::size_t l = 1; l < s.m; ++l) {
      if (!consume(s.entries, remaining, e.value * rotation(s.m, l), mult, tol)) {
        throw std::invalid_argument("spectrum orbits do not close under rotation");
      }
    }
  }
  return out;
}

}  // namespace hyperee
