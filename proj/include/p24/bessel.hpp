#pragma once

#include "p24/ball.hpp"
#include "p24/numerics.hpp"

namespace p24::bessel {

// I_nu(x) from its power series. All terms are positive; once past the peak
// the remaining tail is bounded by a geometric majorant and folded into the
// radius. `terms > 0` forces a fixed number of terms.
Ball bessel_i_series(unsigned nu, const Ball& x, long terms = 0);

// a_m(nu) = binom(nu - 1/2, m) (nu + 1/2)_m / 2^m.
ExactRational a_coeff(unsigned m, unsigned nu = 13);

// E(13, N), selected by N exactly as in the three-case envelope.
Ball envelope_E(unsigned N, mpfr_prec_t precision = 128);

// e^x/sqrt(2 pi x) sum_{m<=N} (-1)^m a_m(13) x^-m with the certified remainder
// e^x/sqrt(2 pi x) E(13,N) |a_{N+1}(13)| x^{-N-1}.
CertifiedValue bessel_i13_asymptotic(const Ball& x, unsigned N);

// Upper bound (2K^2/y) I_12(y/K) on sum_{k>K} I_13(y/k).
Ball tail_sum_bound(const Ball& y, long K);

}  // namespace p24::bessel
