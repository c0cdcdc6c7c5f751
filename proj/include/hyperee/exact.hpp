#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperee {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// base^exp with 0^0 = 1.
inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer ipow(long base, unsigned long exp) { return ipow(Integer(base), exp); }

/// Number of eigenvalues of an order-m dimension-n tensor: n (m-1)^(n-1).
inline Integer eigenvalue_count(unsigned long m, unsigned long n) {
  return Integer(n) * ipow(Integer(m - 1), n - 1);
}

/// Rational to long double with correct magnitude for values far outside double range.
inline long double to_long_double(const Rational& q) {
  if (q == 0) return 0.0L;
  long exp_num = 0;
  long exp_den = 0;
  const double mn = mpz_get_d_2exp(&exp_num, q.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&exp_den, q.get_den_mpz_t());
  return std::ldexp(static_cast<long double>(mn) / static_cast<long double>(md), static_cast<int>(exp_num - exp_den));
}

inline long double to_long_double(const Integer& z) { return to_long_double(Rational(z)); }

inline double to_double(const Rational& q) { return static_cast<double>(to_long_double(q)); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::uint64_t to_u64(const Integer& z) {
  if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 63) throw std::overflow_error("integer does not fit in 63 bits: " + z.get_str());
  return static_cast<std::uint64_t>(std::stoull(z.get_str()));
}

}  // namespace hyperee
