#include "p24/formal_series.hpp"

#include <algorithm>

#include "p24/errors.hpp"

namespace p24 {

FormalSeries::FormalSeries(unsigned order) : order_(order), coeffs_(order + 1) {}

FormalSeries FormalSeries::constant(const PiLaurent& c, unsigned order) {
  FormalSeries f(order);
  f.coeffs_[0] = c;
  return f;
}

FormalSeries FormalSeries::monomial(unsigned power, const PiLaurent& c, unsigned order) {
  FormalSeries f(order);
  if (power <= order) f.coeffs_[power] = c;
  return f;
}

unsigned FormalSeries::valuation() const {
  for (unsigned i = 0; i <= order_; ++i) {
    if (!coeffs_[i].is_zero()) return i;
  }
  return order_ + 1;
}

FormalSeries FormalSeries::truncated(unsigned order) const {
  FormalSeries f(std::min(order, order_));
  for (unsigned i = 0; i <= f.order_; ++i) f.coeffs_[i] = coeffs_[i];
  return f;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& rhs) {
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (unsigned i = 0; i <= order_; ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& rhs) {
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (unsigned i = 0; i <= order_; ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

FormalSeries& FormalSeries::operator*=(const PiLaurent& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  FormalSeries out(std::min(a.order_, b.order_));
  for (unsigned i = 0; i <= out.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= out.order_; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

FormalSeries FormalSeries::derivative() const {
  FormalSeries d(order_ == 0 ? 0 : order_ - 1);
  for (unsigned i = 1; i <= order_; ++i) d.coeffs_[i - 1] = coeffs_[i] * ExactRational(i);
  return d;
}

Ball FormalSeries::evaluate(const Ball& z, const Ball& pi) const {
  Ball acc = Ball::from(0L, z.precision());
  for (unsigned i = order_ + 1; i-- > 0;) {
    acc *= z;
    acc += coeffs_[i].evaluate(pi);
  }
  return acc;
}

FormalSeries exp_series(const FormalSeries& g) {
  if (!g[0].is_zero()) throw DomainError("exp_series needs a zero constant term");
  const unsigned N = g.order();
  FormalSeries f(N);
  f[0] = PiLaurent(1L);
  // n f_n = sum_{k=1}^{n} k g_k f_{n-k}
  for (unsigned n = 1; n <= N; ++n) {
    PiLaurent acc;
    for (unsigned k = 1; k <= n; ++k) {
      if (g[k].is_zero() || f[n - k].is_zero()) continue;
      acc += (g[k] * f[n - k]) * ExactRational(k);
    }
    f[n] = acc * make_rational(1, static_cast<long>(n));
  }
  return f;
}

FormalSeries binomial_power(const FormalSeries& u, const ExactRational& alpha) {
  if (!u[0].is_zero()) throw DomainError("binomial_power needs a zero constant term");
  const unsigned N = u.order();
  FormalSeries result = FormalSeries::constant(PiLaurent(1L), N);
  FormalSeries power = FormalSeries::constant(PiLaurent(1L), N);
  const unsigned v = u.valuation();
  if (v > N) return result;
  for (unsigned j = 1; j * v <= N; ++j) {
    power = power * u;
    result += power * PiLaurent(general_binomial(alpha, j));
  }
  return result;
}

}  // namespace p24
