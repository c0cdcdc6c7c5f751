#include "hyperee/polynomial.hpp"

#include <stdexcept>

namespace hyperee {

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (c_.empty()) return {};
  std::vector<Rational> out(c_);
  const Rational lc = c_.back();
  for (auto& v : out) v /= lc;
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPolynomial(std::move(out));
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  if (a.degree() < b.degree()) return {RationalPolynomial{}, a};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> q(r.size() - db, 0);
  const Rational lc = b.leading();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    const Rational t = r[i] / lc;
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
  }
  return {RationalPolynomial(std::move(q)), RationalPolynomial(std::move(r))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a.monic();
  RationalPolynomial y = b.monic();
  while (!y.is_zero()) {
    RationalPolynomial r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<std::pair<RationalPolynomial, std::size_t>> square_free_decomposition(const RationalPolynomial& f) {
  std::vector<std::pair<RationalPolynomial, std::size_t>> out;
  if (f.degree() < 1) return out;
  const RationalPolynomial fm = f.monic();
  const RationalPolynomial df = fm.derivative();
  const RationalPolynomial a0 = gcd(fm, df);
  RationalPolynomial b = divmod(fm, a0).first;
  RationalPolynomial c = divmod(df, a0).first;
  RationalPolynomial d = c - b.derivative();
  for (std::size_t i = 1; b.degree() >= 1; ++i) {
    const RationalPolynomial a = gcd(b, d);
    b = divmod(b, a).first;
    if (a.degree() >= 1) out.emplace_back(a, i);
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

}  // namespace hyperee
