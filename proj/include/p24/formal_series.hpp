#pragma once

#include <vector>

#include "p24/numerics.hpp"
#include "p24/pi_laurent.hpp"

namespace p24 {

// Truncated power series sum_{i<=order} c_i z^i with PiLaurent coefficients.
// Every operation is exact up to the (explicit) truncation order; results of
// binary operations carry the smaller order of the two operands.
class FormalSeries {
 public:
  explicit FormalSeries(unsigned order);
  static FormalSeries constant(const PiLaurent& c, unsigned order);
  static FormalSeries monomial(unsigned power, const PiLaurent& c, unsigned order);

  unsigned order() const { return order_; }
  const PiLaurent& operator[](unsigned i) const { return coeffs_[i]; }
  PiLaurent& operator[](unsigned i) { return coeffs_[i]; }
  const std::vector<PiLaurent>& coefficients() const { return coeffs_; }
  // Index of the first nonzero coefficient, or order()+1 for zero.
  unsigned valuation() const;

  FormalSeries truncated(unsigned order) const;

  FormalSeries& operator+=(const FormalSeries& rhs);
  FormalSeries& operator-=(const FormalSeries& rhs);
  FormalSeries& operator*=(const PiLaurent& c);
  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator*(FormalSeries a, const PiLaurent& c) { return a *= c; }

  friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  FormalSeries derivative() const;

  // Evaluates at z given pi; the truncated polynomial only, no remainder.
  Ball evaluate(const Ball& z, const Ball& pi) const;

 private:
  unsigned order_;
  std::vector<PiLaurent> coeffs_;
};

// exp(g) for g with zero constant term, from f' = g' f.
FormalSeries exp_series(const FormalSeries& g);

// (1 + u)^alpha = sum_j binom(alpha, j) u^j for u with zero constant term.
FormalSeries binomial_power(const FormalSeries& u, const ExactRational& alpha);

}  // namespace p24
