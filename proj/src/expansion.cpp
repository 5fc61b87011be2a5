#include "p24/expansion.hpp"

#include <cmath>
#include <mutex>

#include "p24/bessel.hpp"
#include "p24/errors.hpp"

namespace p24::expansion {
namespace {

const ExactRational kAlpha = make_rational(27, 4);

ExactRational sign(unsigned e) { return (e % 2 == 0) ? ExactRational(1) : ExactRational(-1); }

// (4 pi)^j as a monomial
PiLaurent four_pi_power(int j) {
  ExactRational c = 1;
  const unsigned a = static_cast<unsigned>(j < 0 ? -j : j);
  const ExactInt p = ExactInt(1) << (2 * a);
  c = j < 0 ? ExactRational(1) / ExactRational(p) : ExactRational(p);
  return PiLaurent::monomial(j, c);
}

Ball real_power(const Ball& base, long num, long den) {
  return pow(base, make_rational(num, den));
}

}  // namespace

PiLaurent A1(unsigned k) {
  if (k == 0) return PiLaurent(1L);
  const ExactRational outer = sign(k) * rising_factorial(make_rational(1, 2) - ExactRational(k), k + 1) / ExactRational(k);
  PiLaurent sum;
  for (unsigned l = 1; l <= k; ++l) {
    ExactRational c = sign(l) * rising_factorial(-ExactRational(k), l);
    c /= ExactRational(factorial(k + l));
    c /= ExactRational(factorial(2 * l - 1));
    sum += four_pi_power(static_cast<int>(2 * l)) * c;
  }
  return sum * outer;
}

PiLaurent A2(unsigned k) {
  const ExactRational outer = sign(k + 1) * rising_factorial(make_rational(1, 2) - ExactRational(k), k + 1);
  PiLaurent sum;
  for (unsigned l = 0; l <= k; ++l) {
    ExactRational c = sign(l) * rising_factorial(-ExactRational(k), l);
    c /= ExactRational(factorial(l + k + 1));
    c /= ExactRational(factorial(2 * l));
    sum += four_pi_power(static_cast<int>(2 * l + 1)) * c;
  }
  return sum * outer;
}

PiLaurent T_coeff(unsigned k) { return (k % 2 == 0) ? A1(k / 2) : A2(k / 2); }

ExactRational binom_coeff_A(const ExactRational& alpha, unsigned m) {
  if (m % 2 == 1) return 0;
  return sign(m / 2) * general_binomial(-alpha, m / 2);
}

PiLaurent Bhat(unsigned m) {
  const unsigned h = m / 2;
  PiLaurent sum;
  for (unsigned l = 0; l <= h; ++l) {
    const PiLaurent t = (m % 2 == 0) ? A1(l) : A2(l);
    sum += t * binom_coeff_A(kAlpha, 2 * h - 2 * l);
  }
  return sum;
}

PiLaurent C_coeff(unsigned m) {
  const unsigned h = m / 2;
  PiLaurent sum;
  if (m % 2 == 0) {
    for (unsigned k = 0; k <= h; ++k) {
      ExactRational c = general_binomial(-ExactRational(k), h - k) * sign(k) * bessel::a_coeff(2 * k);
      sum += four_pi_power(-static_cast<int>(2 * k)) * c;
    }
    return sum * sign(h);
  }
  for (unsigned k = 0; k <= h; ++k) {
    ExactRational c = general_binomial(-make_rational(2 * static_cast<long>(k) + 1, 2), h - k) * sign(k) *
                      bessel::a_coeff(2 * k + 1);
    sum += four_pi_power(-static_cast<int>(2 * k + 1)) * c;
  }
  return sum * sign(h + 1);
}

PiLaurent Btilde(unsigned m) {
  PiLaurent sum;
  for (unsigned k = 0; k <= m; ++k) sum += Bhat(k) * C_coeff(m - k);
  return sum;
}

ExpansionCoeffSet ExpansionCoeffSet::build(unsigned N) {
  ExpansionCoeffSet s;
  s.N = N;
  for (unsigned m = 0; m <= N; ++m) {
    s.T.push_back(T_coeff(m));
    s.Ahat.push_back(binom_coeff_A(kAlpha, m));
    s.C.push_back(C_coeff(m));
  }
  for (unsigned m = 0; m <= N; ++m) {
    const unsigned h = m / 2;
    PiLaurent b;
    for (unsigned l = 0; l <= h; ++l) b += s.T[2 * l + m % 2] * s.Ahat[2 * h - 2 * l];
    s.Bhat.push_back(b);
  }
  for (unsigned m = 0; m <= N; ++m) {
    PiLaurent b;
    for (unsigned k = 0; k <= m; ++k) b += s.Bhat[k] * s.C[m - k];
    s.Btilde.push_back(b);
  }
  return s;
}

std::shared_ptr<const ExpansionCoeffSet> coefficients(unsigned N) {
  static std::mutex mu;
  static std::shared_ptr<const ExpansionCoeffSet> cached;
  std::lock_guard<std::mutex> lock(mu);
  if (!cached || cached->N < N) {
    cached = std::make_shared<const ExpansionCoeffSet>(ExpansionCoeffSet::build(std::max(N, 12U)));
  }
  return cached;
}

Ball Cstar(unsigned m, mpfr_prec_t precision) {
  if (m < 1) throw DomainError("C* requires m >= 1");
  if (m == 1) return Ball::from(1L, precision);
  const Ball mb = Ball::from(static_cast<long>(m), precision);
  const Ball lm = log(mb);
  return mb * 6 * lm - mb * log(lm);
}

long cutoff_n(unsigned N) {
  if (N < 1) throw DomainError("cutoff_n requires N >= 1");
  for (mpfr_prec_t p = 64; p <= 8192; p *= 2) {
    const Ball q = Cstar(N + 2, p) / (pi_ball(p) * 4);
    const Ball v = q * q + 1;
    mpfr_t lo, hi;
    mpfr_inits2(p + 8, lo, hi, static_cast<mpfr_ptr>(nullptr));
    v.lower(lo);
    v.upper(hi);
    mpfr_ceil(lo, lo);
    mpfr_ceil(hi, hi);
    const bool same = mpfr_equal_p(lo, hi) != 0;
    const long c = mpfr_get_si(hi, MPFR_RNDN);
    mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
    if (same) return std::max(138L, c);
    if (v.log2_radius() < -60) throw PrecisionError("cutoff ceiling within 2^-60 of an integer");
  }
  throw PrecisionError("cutoff ceiling undecided");
}

ErrorConstants error_constants(unsigned N, mpfr_prec_t p) {
  if (N < 1) throw DomainError("error_constants requires N >= 1");
  ErrorConstants e;
  e.N = N;
  const Ball pi = pi_ball(p);
  const Ball nfact = Ball::from(factorial(N), p);
  const long n1 = static_cast<long>(N) + 1;
  e.E2 = sqrt(pi * 2) * 2 * cosh(pi * 4);
  e.E3_at_274 = real_power(Ball::from(kAlpha, p), n1, 2) * 2;
  e.E4 = e.E2 * e.E3_at_274 * 3 * static_cast<long>(N);
  ExactRational a_next = bessel::a_coeff(N + 1);
  if (a_next < 0) a_next = -a_next;
  e.E_N1 = bessel::envelope_E(N, p) * Ball::from(a_next, p) * 2 / pow(pi * 4, n1);
  e.E5 = real_power(Ball::from(69L, p), n1, 2) * 17 * nfact;
  e.E6 = (e.E5 + e.E_N1) * 2 + nfact * 18;
  e.E_final = e.E2 * (e.E5 * 3 + e.E6 * 5) / 30 + e.E4 * (nfact * 28 + e.E6) + e.E5 * 5 + e.E6 * 9;
  e.n_cutoff = cutoff_n(N);
  return e;
}

Ball prefactor(long n, mpfr_prec_t p) {
  const Ball nb = Ball::from(n, p);
  return exp(pi_ball(p) * 4 * sqrt(nb)) / (sqrt(Ball::from(2L, p)) * real_power(nb, 27, 4));
}

Ball truncated_sum(long n, unsigned N, mpfr_prec_t p) {
  const auto cs = coefficients(N);
  const Ball pi = pi_ball(p);
  const Ball z = Ball::from(1L, p) / sqrt(Ball::from(n, p));
  Ball acc = Ball::from(0L, p);
  for (unsigned m = N + 1; m-- > 0;) {
    acc *= z;
    acc += cs->Btilde[m].evaluate(pi);
  }
  return acc;
}

CertifiedValue asymptotic_p24(long n, unsigned N, mpfr_prec_t precision) {
  if (N < 1) throw DomainError("asymptotic_p24 requires N >= 1");
  const long cut = cutoff_n(N);
  if (n < cut) {
    throw CutoffError("n = " + std::to_string(n) + " is below the cutoff n(" + std::to_string(N) +
                      ") = " + std::to_string(cut));
  }
  const mpfr_prec_t p = precision > 0 ? precision : default_precision(n);
  const Ball pref = prefactor(n, p);
  const ErrorConstants ec = error_constants(N, p);
  const Ball tail = ec.E_final * real_power(Ball::from(n, p), -(static_cast<long>(N) + 1), 2);
  return CertifiedValue{pref * truncated_sum(n, N, p), pref * tail};
}

FormalSeries series_oracle(unsigned N, long s) {
  if (N > 24) throw ResourceError("series_oracle order budget is 24");
  if (s < -16 || s > 16) throw ResourceError("series_oracle shift budget is |s| <= 16");
  const ExactRational d = ExactRational(s - 1);
  const ExactRational half = make_rational(1, 2);

  // 4 pi (sqrt(n+s-1) - sqrt n) = 4 pi sum_{j>=1} binom(1/2, j) d^j z^{2j-1}
  FormalSeries g(N);
  ExactRational dp = 1;
  for (unsigned j = 1; 2 * j - 1 <= N; ++j) {
    dp *= d;
    g[2 * j - 1] = PiLaurent::monomial(1, general_binomial(half, j) * dp * 4);
  }
  const FormalSeries u = FormalSeries::monomial(2, PiLaurent(d), N);

  FormalSeries bessel_part(N);
  for (unsigned m = 0; m <= N; ++m) {
    // (-1)^m a_m (4 pi)^{-m} z^m (1 + u)^{-m/2}
    ExactRational c = sign(m) * bessel::a_coeff(m);
    c /= ExactRational(ExactInt(1) << (2 * m));
    FormalSeries t = FormalSeries::monomial(m, PiLaurent::monomial(-static_cast<int>(m), c), N);
    bessel_part += t * binomial_power(u, -make_rational(static_cast<long>(m), 2));
  }
  return exp_series(g) * binomial_power(u, -kAlpha) * bessel_part;
}

ExactRational signed_binomial_lhs(unsigned r, unsigned m) {
  ExactRational sum = 0;
  for (unsigned s = 0; s <= r; ++s) {
    sum += sign(s) * ExactRational(binomial(r, s)) * general_binomial(make_rational(static_cast<long>(s), 2), m);
  }
  return sum;
}

ExactRational signed_binomial_rhs(unsigned r, unsigned m) {
  if (r == 0 && m == 0) return 1;
  if (r > m) return 0;
  ExactRational v = sign(m) * ExactRational(ExactInt(r) << r) / ExactRational(ExactInt(m) << (2 * m));
  return v * ExactRational(binomial(2 * m - r - 1, m - r));
}

bool signed_binomial_identity_check(unsigned r, unsigned m) {
  if (!(r < 2 * m || (r == 0 && m == 0))) throw DomainError("identity requires r < 2m or r = m = 0");
  return signed_binomial_lhs(r, m) == signed_binomial_rhs(r, m);
}

Ball main_term_general(const ExactRational& alpha, long n, mpfr_prec_t precision) {
  if (alpha <= 0) throw DomainError("alpha must be positive");
  const ExactRational arg = ExactRational(24 * n) / alpha - 1;
  if (arg <= 0) throw DomainError("main_term_general requires 24 n / alpha > 1");
  const mpfr_prec_t p = precision > 0 ? precision : default_precision(std::max(n, 1L));
  const Ball pi = pi_ball(p);
  const Ball lambda = sqrt(Ball::from(arg, p));
  const Ball a = Ball::from(alpha, p);
  Ball v = sqrt(Ball::from(ExactRational(12) / alpha, p)) * exp(pi * a / 6 * lambda);
  return v / exp(log(lambda) * Ball::from((alpha + 3) / 2, p));
}

}  // namespace p24::expansion
