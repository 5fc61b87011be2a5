#pragma once

#include <memory>
#include <vector>

#include "p24/ball.hpp"
#include "p24/formal_series.hpp"
#include "p24/numerics.hpp"
#include "p24/pi_laurent.hpp"

namespace p24::expansion {

// Coefficients of exp(4 pi (sqrt(n-1) - sqrt n)) in powers of n^{-1/2}:
// T_{2k} = A1(k), T_{2k+1} = A2(k).
PiLaurent A1(unsigned k);
PiLaurent A2(unsigned k);
PiLaurent T_coeff(unsigned k);

// Coefficients of (1 - 1/n)^{-alpha} in powers of n^{-1/2}.
ExactRational binom_coeff_A(const ExactRational& alpha, unsigned m);

PiLaurent Bhat(unsigned m);
PiLaurent C_coeff(unsigned m);
PiLaurent Btilde(unsigned m);

struct ExpansionCoeffSet {
  unsigned N = 0;
  std::vector<PiLaurent> T;
  std::vector<ExactRational> Ahat;
  std::vector<PiLaurent> Bhat;
  std::vector<PiLaurent> C;
  std::vector<PiLaurent> Btilde;

  static ExpansionCoeffSet build(unsigned N);
};

// Shared immutable coefficient set covering at least 0..N.
std::shared_ptr<const ExpansionCoeffSet> coefficients(unsigned N);

Ball Cstar(unsigned m, mpfr_prec_t precision = 128);

// max{138, ceil((C*(N+2)/(4 pi))^2 + 1)}, the ceiling decided by ball
// refinement.
long cutoff_n(unsigned N);

struct ErrorConstants {
  unsigned N = 0;
  Ball E2, E3_at_274, E4, E_N1, E5, E6, E_final;
  long n_cutoff = 0;
};

ErrorConstants error_constants(unsigned N, mpfr_prec_t precision = 128);

// e^{4 pi sqrt n} / (sqrt 2 n^{27/4})
Ball prefactor(long n, mpfr_prec_t precision);

// sum_{m<=N} Btilde_m n^{-m/2}
Ball truncated_sum(long n, unsigned N, mpfr_prec_t precision);

// Certified bracket of p_24(n) for n >= n(N); CutoffError below.
CertifiedValue asymptotic_p24(long n, unsigned N, mpfr_prec_t precision = 0);

// Normalized main-term expansion at argument n + s in z = n^{-1/2}, built by
// formal composition only (no closed-form coefficients).
FormalSeries series_oracle(unsigned N, long s);

ExactRational signed_binomial_lhs(unsigned r, unsigned m);
ExactRational signed_binomial_rhs(unsigned r, unsigned m);
// Requires r < 2m or r = m = 0.
bool signed_binomial_identity_check(unsigned r, unsigned m);

// sqrt(12/alpha) e^{(pi alpha/6) lambda} / lambda^{(alpha+3)/2},
// lambda = sqrt(24 n/alpha - 1).
Ball main_term_general(const ExactRational& alpha, long n, mpfr_prec_t precision = 0);

}  // namespace p24::expansion
