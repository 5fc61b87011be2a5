#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "p24/bessel.hpp"
#include "p24/errors.hpp"
#include "p24/rademacher.hpp"
#include "p24/seqcore.hpp"

using namespace p24;
using namespace p24::rademacher;

namespace {

// Direct exponential sum with modular inverses by search.
std::complex<long double> brute_kloosterman(long a, long b, long k) {
  std::complex<long double> s = 0;
  for (long h = 0; h < k; ++h) {
    if (std::gcd(h, k) != 1) continue;
    long inv = 0;
    for (long t = 0; t < k; ++t) {
      if ((h * t) % k == 1 % k) inv = t;
    }
    const long double ang = 2 * M_PIl * static_cast<long double>(a * h + b * inv) / k;
    s += std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

const seq::SeqTable& table() {
  static const seq::SeqTable t = seq::extend_table(seq::make_table(24), 2000);
  return t;
}

long inverse_mod(long a, long m) {
  for (long t = 0; t < m; ++t) {
    if ((a * t) % m == 1 % m) return t;
  }
  return 0;
}

}  // namespace

TEST_CASE("kloosterman sum matches the brute-force oracle") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> kk(1, 60), aa(-200, 200);
  for (int i = 0; i < 200; ++i) {
    const long k = kk(rng), a = aa(rng), b = aa(rng);
    const ComplexBall s = kloosterman_sum(a, b, k, 128);
    const auto ref = brute_kloosterman(a, b, k);
    CHECK(std::fabs(s.re.mid_double() - static_cast<double>(ref.real())) < 1e-9);
    CHECK(std::fabs(s.im.mid_double()) < 1e-9);
    CHECK(s.re.rad_double() < 1e-30);
  }
}

TEST_CASE("trivial estimate, reality and k = 1") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> kk(1, 150), nn(1, 5000);
  for (int i = 0; i < 200; ++i) {
    const long k = kk(rng), n = nn(rng);
    const Ball v = kloosterman(k, n);
    CHECK(certainly_less_equal(abs(v), Ball::from(k, 128)));
    const ComplexBall s = kloosterman_sum(n - 1, -1, k, 128);
    CHECK(s.im.contains(ExactInt(0)));
    CHECK(s.im.log2_radius() < -100);
  }
  for (long n : {1L, 7L, 500L}) {
    const Ball one = kloosterman(1, n);
    CHECK(one.is_exact());
    CHECK(one.contains(ExactInt(1)));
  }
  // k = 2: the only unit is h = 1 = hbar, so the sum is (-1)^{n-1-1} = (-1)^n.
  for (long n = 2; n < 12; ++n) CHECK(kloosterman(2, n).contains(ExactInt(n % 2 == 0 ? 1 : -1)));
}

TEST_CASE("twisted multiplicativity S(a,b;k1 k2) = S(a k2bar,b k2bar;k1) S(a k1bar,b k1bar;k2)") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> kk(2, 25), aa(-50, 50);
  int tested = 0;
  while (tested < 60) {
    const long k1 = kk(rng), k2 = kk(rng);
    if (std::gcd(k1, k2) != 1) continue;
    const long a = aa(rng), b = aa(rng);
    const long i2 = inverse_mod(k2 % k1, k1), i1 = inverse_mod(k1 % k2, k2);
    const ComplexBall lhs = kloosterman_sum(a, b, k1 * k2, 160);
    const ComplexBall s1 = kloosterman_sum(a * i2, b * i2, k1, 160);
    const ComplexBall s2 = kloosterman_sum(a * i1, b * i1, k2, 160);
    const Ball prod = s1.re * s2.re - s1.im * s2.im;
    CHECK(lhs.re.overlaps(prod));
    ++tested;
  }
}

TEST_CASE("variant aliases agree") {
  for (Variant v : kAllVariants) {
    for (long n : {3L, 11L, 40L}) {
      for (long k : {3L, 7L, 12L}) CHECK(kloosterman(k, n, 128, v).overlaps(kloosterman(k, n, 128, alias_of(v))));
    }
    CHECK(alias_of(alias_of(v)) == v);
  }
}

TEST_CASE("partial sums and tails bracket exact values") {
  CHECK(std::fabs((exact_formula_partial(10, 20, 160) - Ball::from(table()[10], 160)).mid_double()) < 0.5);
  for (long K : {1L, 3L, 10L}) {
    Ball enc = exact_formula_partial(10, K, 160);
    enc.add_error(truncation_tail(10, K, 160));
    CHECK(enc.contains(table()[10]));
  }
  CHECK(certainly_less(truncation_tail(500, 40), Ball::from(make_rational(2, 5), 128)));
  const Ball residual = abs(Ball::from(table()[2], 128) - main_term(2, 128));
  CHECK(certainly_less_equal(residual, truncation_tail(2, 1)));
  CHECK(exact_formula_partial(2, 1, 128).overlaps(main_term(2, 128)));
}

TEST_CASE("main term is the k = 1 Bessel term") {
  for (long n : {2L, 50L, 700L}) {
    const mpfr_prec_t p = default_precision(n);
    const Ball x = pi_ball(p) * 4 * sqrt(Ball::from(n - 1, p));
    const Ball direct =
        pi_ball(p) * 2 * bessel::bessel_i_series(13, x) / pow(Ball::from(n - 1, p), make_rational(13, 2));
    CHECK(main_term(n, p).overlaps(direct));
  }
}

TEST_CASE("bound chain |p(n) - M(n)| <= R_bound(n) for 2 <= n <= 2000") {
  for (long n = 2; n <= 2000; ++n) {
    const mpfr_prec_t p = default_precision(n);
    const Ball residual = abs(Ball::from(table()[n], p) - main_term(n, p));
    CHECK(certainly_less_equal(residual, R_bound(n, p)));
  }
  CHECK(R_bound(2).is_positive());
  CHECK(certainly_less(R_bound(10000) / main_term(10000), Ball::from(make_rational(1, 1000000), 64)));
}

TEST_CASE("G ratio agrees with both expressions") {
  for (long n : {2L, 138L, 1000L}) {
    const mpfr_prec_t p = default_precision(n);
    CHECK(G_ratio(n, p).overlaps(R_bound(n, p) / main_term(n, p)));
  }
  CHECK(certainly_less(G_ratio(138), Ball::from(make_rational(1, 138), 128)));
  CHECK(G_ratio(138).is_positive());
}

TEST_CASE("integer resolution on 2..500") {
  for (long n = 2; n <= 500; ++n) CHECK(p24_via_rademacher(n) == table()[n]);
  const Resolution r = resolve(100);
  CHECK(r.value == table()[100]);
  CHECK(r.terms >= 1);
  CHECK(certainly_less(r.tail, Ball::from(make_rational(1, 4), 64)));
  CHECK_THROWS_AS(p24_via_rademacher(1), DomainError);
}

TEST_CASE("calibration selects a single convention class") {
  const CalibrationReport rep = calibrate(2, 40, -40);
  CHECK(rep.unique);
  CHECK(rep.selected == kSelectedVariant);
  REQUIRE(rep.accepted.size() == 2);
  CHECK(rep.accepted[0] == kSelectedVariant);
  CHECK(rep.accepted[1] == alias_of(kSelectedVariant));
  for (const auto& v : rep.variants) {
    const bool in = v.variant == kSelectedVariant || v.variant == alias_of(kSelectedVariant);
    CHECK(v.resolved_all == in);
  }
  const auto j = rep.to_json();
  CHECK(j["variant"] == variant_name(kSelectedVariant));
  CHECK(j["tested_range"][0] == 2);
  CHECK(j["tested_range"][1] == 40);
  CHECK(j["all_resolved"] == true);
}
