#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "p24/errors.hpp"
#include "p24/expansion.hpp"
#include "p24/formal_series.hpp"
#include "p24/rademacher.hpp"
#include "p24/seqcore.hpp"

using namespace p24;
using namespace p24::expansion;

namespace {

const seq::SeqTable& table() {
  static const seq::SeqTable t = seq::extend_table(seq::make_table(24), 20001, seq::TableMethod::Pentagonal);
  return t;
}

PiLaurent pi_term(int e, long num, long den = 1) { return PiLaurent::monomial(e, make_rational(num, den)); }

Ball bound_T(unsigned k, mpfr_prec_t p) {
  const Ball pi = pi_ball(p);
  return sqrt(pi) * 2 * cosh(pi * 4) / pow(Ball::from(static_cast<long>(k), p), make_rational(3, 2));
}

Ball bound_Bhat(unsigned m, mpfr_prec_t p) {
  const Ball pi = pi_ball(p);
  const Ball c = pi * 2 + sqrt(pi) * 8 * cosh(pi * 4) / 23;
  return pow(Ball::from(make_rational(27, 4), p), make_rational(static_cast<long>(m), 2)) * c;
}

}  // namespace

TEST_CASE("T_k matches a formal exponential of 4 pi (sqrt(n-1) - sqrt n)") {
  const unsigned order = 20;
  FormalSeries g(order);
  for (unsigned j = 1; 2 * j - 1 <= order; ++j) {
    ExactRational c = general_binomial(make_rational(1, 2), j) * 4;
    if (j % 2) c = -c;
    g[2 * j - 1] = PiLaurent::monomial(1, c);
  }
  const FormalSeries e = exp_series(g);
  for (unsigned k = 0; k <= order; ++k) CHECK(T_coeff(k) == e[k]);
}

TEST_CASE("A_m(alpha) matches the binomial series of (1 - z^2)^{-alpha}") {
  const unsigned order = 30;
  for (const ExactRational& a : {make_rational(27, 4), make_rational(1), make_rational(5, 2)}) {
    const FormalSeries b = binomial_power(FormalSeries::monomial(2, PiLaurent(-1L), order), -a);
    for (unsigned m = 0; m <= order; ++m) CHECK(PiLaurent(binom_coeff_A(a, m)) == b[m]);
  }
}

TEST_CASE("closed-form Btilde equals the independent series oracle through m = 24") {
  const FormalSeries s = series_oracle(24, 0);
  for (unsigned m = 0; m <= 24; ++m) CHECK(Btilde(m) == s[m]);
  const auto cs = coefficients(24);
  for (unsigned m = 0; m <= 24; ++m) CHECK(cs->Btilde[m] == s[m]);
}

TEST_CASE("low-order coefficients") {
  CHECK(Btilde(0) == PiLaurent(1L));
  CHECK(Btilde(1) == pi_term(1, -2) + pi_term(-1, -675, 32));
  CHECK(Bhat(0) == PiLaurent(1L));
  CHECK(Bhat(1) == pi_term(1, -2));
  CHECK(Bhat(2) == pi_term(0, 27, 4) + pi_term(2, 2));
  CHECK(C_coeff(0) == PiLaurent(1L));
  CHECK(C_coeff(1) == pi_term(-1, -675, 32));
  CHECK(C_coeff(2) == pi_term(-2, 450225, 2048));
  CHECK(T_coeff(1) == pi_term(1, -2));
  CHECK(series_oracle(0, 0) == FormalSeries::constant(PiLaurent(1L), 0));
}

TEST_CASE("shifted oracle approximates the normalized exact values") {
  const long n = 10000;
  const mpfr_prec_t p = 4096;
  const FormalSeries s = series_oracle(6, 1);
  const Ball z = Ball::from(1L, p) / sqrt(Ball::from(n, p));
  const Ball approx = s.evaluate(z, pi_ball(p));
  const Ball exact = Ball::from(table()[n + 1], p) / prefactor(n, p);
  // Remainder of order n^{-7/2} with a moderate constant.
  CHECK(std::fabs((approx - exact).mid_double()) < 1e6 * std::pow(static_cast<double>(n), -3.5));
}

TEST_CASE("series oracle budgets") {
  CHECK_THROWS_AS(series_oracle(25, 0), ResourceError);
  CHECK_THROWS_AS(series_oracle(4, 17), ResourceError);
  CHECK_NOTHROW(series_oracle(4, -16));
}

TEST_CASE("C*, cutoffs and error constants") {
  CHECK(std::fabs(Cstar(3).mid_double() - 19.493) < 5e-3);
  CHECK(std::fabs(Cstar(11).mid_double() - 148.64) < 5e-2);
  CHECK(Cstar(1).contains(ExactInt(1)));
  CHECK(cutoff_n(1) == 138);
  CHECK(cutoff_n(9) == 141);
  for (unsigned N = 1; N <= 8; ++N) CHECK(cutoff_n(N) == 138);
  CHECK(cutoff_n(15) > 141);
  const ErrorConstants e = error_constants(1);
  CHECK(std::fabs(e.E2.mid_double() / 7.19e5 - 1) < 2e-3);
  CHECK(e.E3_at_274.contains(make_rational(27, 2)));
  CHECK(e.E5.contains(ExactInt(1173)));
  CHECK(e.n_cutoff == 138);
  for (unsigned N = 1; N <= 9; ++N) {
    const ErrorConstants c = error_constants(N);
    CHECK(c.E_final.is_positive());
    CHECK(certainly_less(c.E5, c.E_final));
  }
  CHECK_THROWS_AS(cutoff_n(0), DomainError);
}

TEST_CASE("G ratio below n^{-(N+1)/2} at n(N) and 4 n(N)") {
  for (unsigned N = 1; N <= 9; ++N) {
    for (long n : {cutoff_n(N), 4 * cutoff_n(N)}) {
      const mpfr_prec_t p = default_precision(n);
      const Ball rhs = pow(Ball::from(n, p), make_rational(-(static_cast<long>(N) + 1), 2));
      CHECK(certainly_less_equal(rademacher::G_ratio(n, p), rhs));
    }
  }
}

TEST_CASE("coefficient bounds") {
  const mpfr_prec_t p = 192;
  for (unsigned k = 1; k <= 20; ++k) CHECK(certainly_less_equal(abs(T_coeff(k).evaluate(p)), bound_T(k, p)));
  for (unsigned m = 0; m <= 40; ++m) {
    const ExactRational a = abs(binom_coeff_A(make_rational(27, 4), m));
    CHECK(certainly_less_equal(Ball::from(a, p), pow(Ball::from(make_rational(27, 4), p), make_rational(m, 2))));
  }
  for (unsigned m = 0; m <= 20; ++m) {
    CHECK(certainly_less_equal(abs(Bhat(m).evaluate(p)), bound_Bhat(m, p)));
    const Ball cb = Ball::from(ExactInt(factorial(m) * 8), p) * pow(Ball::from(69L, p), make_rational(m, 2));
    CHECK(certainly_less_equal(abs(C_coeff(m).evaluate(p)), cb));
  }
}

TEST_CASE("certified brackets contain exact values") {
  for (unsigned N = 1; N <= 9; ++N) {
    for (long n : {cutoff_n(N), cutoff_n(N) + 1, 777L, 5000L, 20000L}) {
      CHECK(asymptotic_p24(n, N).contains(table()[n]));
    }
  }
  CHECK_THROWS_AS(asymptotic_p24(137, 1), CutoffError);
  CHECK_THROWS_AS(asymptotic_p24(140, 9), CutoffError);
  CHECK_THROWS_AS(asymptotic_p24(1000, 0), DomainError);
}

TEST_CASE("empirical sharpness of the truncation") {
  const long n = 20000;
  const mpfr_prec_t p = default_precision(n) + 64;
  const Ball scaled = Ball::from(table()[n], p) / prefactor(n, p);
  for (unsigned N = 1; N <= 5; ++N) {
    const Ball resid = (scaled - truncated_sum(n, N, p)) * pow(sqrt(Ball::from(n, p)), static_cast<long>(N) + 1);
    const Ball ratio = abs(resid / Btilde(N + 1).evaluate(p));
    CHECK(certainly_less(Ball::from(make_rational(4, 5), p), ratio));
    CHECK(certainly_less(ratio, Ball::from(make_rational(6, 5), p)));
  }
}

TEST_CASE("signed binomial identity") {
  for (unsigned m = 0; 2 * m <= 60; ++m) {
    for (unsigned r = 0; r < 2 * m || (r == 0 && m == 0); ++r) {
      CHECK(signed_binomial_identity_check(r, m));
      if (m == 0) break;
    }
  }
  CHECK(signed_binomial_lhs(1, 1) == make_rational(-1, 2));
  CHECK(signed_binomial_rhs(1, 1) == make_rational(-1, 2));
  CHECK(signed_binomial_lhs(1, 2) == make_rational(1, 8));
  CHECK(signed_binomial_lhs(0, 0) == 1);
  CHECK_THROWS_AS(signed_binomial_identity_check(4, 2), DomainError);
}

TEST_CASE("general main term") {
  // alpha = 24 collapses to e^{4 pi sqrt(n-1)} / (sqrt 2 (n-1)^{27/4}).
  for (long n : {10L, 10000L}) {
    const mpfr_prec_t p = default_precision(n);
    const Ball m1 = Ball::from(n - 1, p);
    const Ball direct = exp(pi_ball(p) * 4 * sqrt(m1)) / (sqrt(Ball::from(2L, p)) * pow(m1, make_rational(27, 4)));
    CHECK(main_term_general(make_rational(24), n, p).overlaps(direct));
  }
  // At n = 10^4 the ratio is about 1 - a_1(13)/x, x = 4 pi sqrt(n-1): 7% away
  // from 1, so agreement within 2% is out of reach at this n.
  const long n = 10000;
  const mpfr_prec_t p = default_precision(n);
  const double ratio = (Ball::from(table()[n], p) / main_term_general(make_rational(24), n, p)).mid_double();
  const double x = 4 * M_PI * std::sqrt(n - 1.0);
  CHECK(std::fabs(ratio - (1 - 675.0 / 8 / x)) < 3e-3);
  const seq::SeqTable one = seq::extend_table(seq::make_table(1), 100);
  const double r1 = (Ball::from(one[100], 128) / main_term_general(make_rational(1), 100, 128)).mid_double();
  CHECK(std::fabs(r1 - 1) < 0.05);
  CHECK_THROWS_AS(main_term_general(make_rational(24), 1), DomainError);
  CHECK_THROWS_AS(main_term_general(make_rational(0), 5), DomainError);
}
