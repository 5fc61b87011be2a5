#include "p24/bessel.hpp"

#include <cmath>

#include "p24/errors.hpp"

namespace p24::bessel {

Ball bessel_i_series(unsigned nu, const Ball& x, long terms) {
  if (!x.is_positive()) throw DomainError("bessel_i_series requires x > 0");
  const mpfr_prec_t p = x.precision();
  const Ball half_x = x / 2;
  const Ball q = half_x * half_x;

  Ball term = pow(half_x, static_cast<long>(nu)) / Ball::from(factorial(nu), p);
  Ball sum = term;
  const double half_x_hi = half_x.mid_double() + half_x.rad_double();
  const long max_terms = static_cast<long>(8.0 * half_x_hi) + 4L * p + 64;

  auto tail_ratio = [&](long m) {
    // ratio t_{m+1}/t_m bound for every later step: q / ((m+1)(m+1+nu))
    Ball r = q / ((m + 1) * (m + 1 + static_cast<long>(nu)));
    return r;
  };

  mpfr_t tu, su, thr;
  mpfr_inits2(p + 16, tu, su, thr, static_cast<mpfr_ptr>(nullptr));
  long m = 0;
  for (;; ++m) {
    if (terms > 0) {
      if (m + 1 >= terms) break;
    } else if (static_cast<double>(m) > half_x_hi) {
      term.upper(tu);
      sum.lower(su);
      mpfr_mul_2si(thr, su, -(static_cast<long>(p) + 8), MPFR_RNDD);
      if (mpfr_cmp(tu, thr) < 0) break;
    }
    if (m > max_terms) {
      mpfr_clears(tu, su, thr, static_cast<mpfr_ptr>(nullptr));
      throw PrecisionError("bessel_i_series: radius target not reached");
    }
    term *= q;
    term /= (m + 1) * (m + 1 + static_cast<long>(nu));
    sum += term;
  }
  mpfr_clears(tu, su, thr, static_cast<mpfr_ptr>(nullptr));

  Ball r = tail_ratio(m);
  Ball one = Ball::from(1L, p);
  if (!certainly_less(r, one)) throw PrecisionError("bessel_i_series: tail ratio not below 1");
  Ball tail = term * r / (one - r);
  sum.add_error(tail);
  if (!sum.is_finite()) throw PrecisionError("bessel_i_series: non-finite result");
  return sum;
}

ExactRational a_coeff(unsigned m, unsigned nu) {
  const ExactRational half(1, 2);
  ExactRational v = general_binomial(ExactRational(nu) - half, m) * rising_factorial(ExactRational(nu) + half, m);
  v /= ExactRational(ExactInt(1) << m);
  v.canonicalize();
  return v;
}

Ball envelope_E(unsigned N, mpfr_prec_t precision) {
  if (N < 1) throw DomainError("envelope_E requires N >= 1");
  const mpfr_prec_t p = precision;
  const Ball pi = pi_ball(p);
  const Ball one = Ball::from(1L, p);
  if (N <= 11) {
    const long n = static_cast<long>(N);
    Ball c = sqrt(Ball::from(2L, p) / pow(pi, 3L));
    c *= sqrt(Ball::from(14L, p) / (12 - n));
    c *= sqrt(Ball::from(make_rational(2 * n + 29, 2), p));
    c *= sqrt(one / (13 - n)) - sqrt(one / 14);
    return one + c;
  }
  if (N == 12) {
    return one + sqrt(Ball::from(29L, p)) / pi * (sqrt(Ball::from(14L, p)) - one);
  }
  const long n = static_cast<long>(N);
  const Ball two_sqrt_pi = sqrt(pi) * 2;
  const Ball s = sqrt(Ball::from(2 * n + 29, p));
  const Ball lg = log(Ball::from(n + 1, p));
  const Ball c405 = Ball::from(405L, p);
  Ball e = one + (two_sqrt_pi + c405) / two_sqrt_pi * s;
  e += s * lg / two_sqrt_pi;
  e += c405 * s * lg / (two_sqrt_pi * (n + 2));
  return e;
}

CertifiedValue bessel_i13_asymptotic(const Ball& x, unsigned N) {
  const mpfr_prec_t p = x.precision();
  if (!certainly_less(Ball::from(1L, p), x)) throw DomainError("bessel_i13_asymptotic requires x > 1");
  if (N < 1) throw DomainError("bessel_i13_asymptotic requires N >= 1");
  const Ball pi = pi_ball(p);
  const Ball pref = exp(x) / sqrt(pi * x * 2);
  const Ball inv = Ball::from(1L, p) / x;
  Ball s = Ball::from(0L, p);
  Ball xp = Ball::from(1L, p);
  for (unsigned m = 0; m <= N; ++m) {
    Ball t = Ball::from(a_coeff(m), p) * xp;
    if (m % 2 == 1) {
      s -= t;
    } else {
      s += t;
    }
    xp *= inv;
  }
  ExactRational a_next = a_coeff(N + 1);
  if (a_next < 0) a_next = -a_next;
  Ball bound = pref * envelope_E(N, p) * Ball::from(a_next, p) * xp;
  return CertifiedValue{pref * s, bound};
}

Ball tail_sum_bound(const Ball& y, long K) {
  if (K < 1) throw DomainError("tail_sum_bound requires K >= 1");
  if (!y.is_positive()) throw DomainError("tail_sum_bound requires y > 0");
  const Ball arg = y / K;
  return Ball::from(2 * K * K, y.precision()) / y * bessel_i_series(12, arg);
}

}  // namespace p24::bessel
