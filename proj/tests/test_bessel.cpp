#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "p24/bessel.hpp"
#include "p24/errors.hpp"

using namespace p24;
using namespace p24::bessel;

namespace {

// e^{-x} I_n(x) = (1/pi) int_0^pi e^{x(cos t - 1)} cos(n t) dt; the trapezoid
// rule is spectrally accurate for this periodic integrand.
long double scaled_bessel_quadrature(int n, long double x) {
  const int M = 8000;
  long double s = 0;
  for (int i = 0; i <= M; ++i) {
    const long double t = M_PIl * i / M;
    const long double w = (i == 0 || i == M) ? 0.5L : 1.0L;
    s += w * std::exp(x * (std::cos(t) - 1)) * std::cos(n * t);
  }
  return s / M;
}

double relative_to_quadrature(unsigned nu, double x) {
  const Ball v = bessel_i_series(nu, Ball::from_decimal(std::to_string(x), 128));
  const Ball scaled = v * exp(Ball::from_decimal(std::to_string(-x), 128));
  const long double ref = scaled_bessel_quadrature(static_cast<int>(nu), x);
  return static_cast<double>(std::fabs(scaled.mid_double() - ref) / ref);
}

}  // namespace

TEST_CASE("series agrees with an independent quadrature") {
  // Small orders everywhere; large orders only where the integral does not
  // cancel catastrophically in long double.
  for (unsigned nu : {0U, 1U}) {
    for (double x : {0.5, 2.0, 10.0, 50.0, 300.0}) CHECK(relative_to_quadrature(nu, x) < 1e-12);
  }
  for (unsigned nu : {12U, 13U}) {
    for (double x : {20.0, 50.0, 300.0}) CHECK(relative_to_quadrature(nu, x) < 1e-10);
  }
}

TEST_CASE("tabulated values") {
  const Ball i0 = bessel_i_series(0, Ball::from(1L, 128));
  CHECK(std::fabs(i0.mid_double() - 1.2660658777520083356) < 1e-15);
  const Ball i1 = bessel_i_series(1, Ball::from(1L, 128));
  CHECK(std::fabs(i1.mid_double() - 0.5651591039924850272) < 1e-15);
}

TEST_CASE("recurrence I_{nu-1} - I_{nu+1} = (2 nu / x) I_nu") {
  for (long xi : {3L, 17L, 120L}) {
    const Ball x = Ball::from(xi, 192);
    for (unsigned nu = 1; nu <= 14; ++nu) {
      const Ball lhs = bessel_i_series(nu - 1, x) - bessel_i_series(nu + 1, x);
      const Ball rhs = bessel_i_series(nu, x) * (2 * static_cast<long>(nu)) / x;
      CHECK(lhs.overlaps(rhs));
    }
  }
}

TEST_CASE("a_m(13) coefficients") {
  CHECK(a_coeff(0) == 1);
  CHECK(a_coeff(1) == make_rational(675, 8));
  CHECK(a_coeff(2) == make_rational(450225, 128));
  // prod_{j<=m} (4 nu^2 - (2j-1)^2) / (m! 8^m)
  for (unsigned nu : {0U, 3U, 13U}) {
    ExactRational p = 1;
    for (unsigned m = 1; m <= 20; ++m) {
      p *= ExactRational(4 * static_cast<long>(nu * nu) - static_cast<long>((2 * m - 1) * (2 * m - 1)));
      p /= ExactRational(8 * static_cast<long>(m));
      CHECK(a_coeff(m, nu) == p);
    }
  }
  // Integer order never terminates; the sign alternates once 2m - 1 > 26.
  CHECK(a_coeff(14) < 0);
  CHECK(a_coeff(15) > 0);
}

TEST_CASE("envelope constants") {
  // Four-decimal value 1.0241 (truncated), plus a direct double evaluation.
  const double e1 = 1 + std::sqrt(2 / (M_PI * M_PI * M_PI)) * std::sqrt(14.0 / 11) * std::sqrt(15.5) *
                            (std::sqrt(1.0 / 12) - std::sqrt(1.0 / 14));
  CHECK(std::fabs(envelope_E(1).mid_double() - 1.0241) < 1e-4);
  CHECK(std::fabs(envelope_E(1).mid_double() - e1) < 1e-12);
  for (unsigned N = 1; N <= 20; ++N) CHECK(envelope_E(N).is_positive());
  CHECK_THROWS_AS(envelope_E(0), DomainError);
}

TEST_CASE("series lies inside the asymptotic envelope") {
  for (long x : {2L, 5L, 10L, 20L, 50L, 100L, 300L, 1000L}) {
    const Ball bx = Ball::from(x, 256);
    const Ball series = bessel_i_series(13, bx);
    for (unsigned N = 1; N <= 15; ++N) {
      const CertifiedValue a = bessel_i13_asymptotic(bx, N);
      CHECK(a.enclosure().contains(series));
    }
  }
}

TEST_CASE("tail bound dominates a long partial tail") {
  const Ball y = Ball::from(400L, 128);
  for (long K : {5L, 20L, 60L}) {
    Ball partial = Ball::from(0L, 128);
    for (long k = K + 1; k <= K + 3000; ++k) partial += bessel_i_series(13, y / k);
    CHECK(certainly_less(partial, tail_sum_bound(y, K)));
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(bessel_i13_asymptotic(Ball::from(1L, 64), 3), DomainError);
  CHECK_THROWS_AS(bessel_i13_asymptotic(Ball::from(5L, 64), 0), DomainError);
  CHECK_THROWS_AS(bessel_i_series(13, Ball::from(-2L, 64)), DomainError);
  CHECK_THROWS_AS(tail_sum_bound(Ball::from(5L, 64), 0), DomainError);
}
