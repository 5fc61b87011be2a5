#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "p24/ball.hpp"
#include "p24/errors.hpp"

using namespace p24;

namespace {

constexpr mpfr_prec_t kRef = 2048;

// High-precision reference value of f at an exact rational, returned as a
// rational. Its error (2^-2048 relative) is far below any ball radius tested.
using RefFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

ExactRational reference(RefFn f, const ExactRational& q) {
  mpfr_t x, y;
  mpfr_inits2(kRef, x, y, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  f(y, x, MPFR_RNDN);
  mpq_class out;
  mpfr_get_q(out.get_mpq_t(), y);
  mpfr_clears(x, y, static_cast<mpfr_ptr>(nullptr));
  return out;
}

struct Sampler {
  std::mt19937_64 rng{20240917};
  ExactRational rational(long lo, long hi) {
    std::uniform_int_distribution<long> num(lo * 1000, hi * 1000);
    std::uniform_int_distribution<long> den(1, 997);
    const long d = den(rng);
    return make_rational(num(rng) * d / 1000 + num(rng) % 7, d);
  }
  // Ball around c with a random radius, plus an exact point inside it.
  std::pair<Ball, ExactRational> ball_around(const ExactRational& c, mpfr_prec_t p) {
    std::uniform_int_distribution<long> rexp(8, 40);
    std::uniform_int_distribution<long> t(-1000, 1000);
    const ExactRational r = make_rational(1, 1) / ExactRational(ExactInt(1) << rexp(rng));
    const ExactRational point = c + r * make_rational(t(rng), 1000);
    Ball b = Ball::from(c, p);
    b.add_error(Ball::from(r, p));
    return {b, point};
  }
};

}  // namespace

TEST_CASE("exact construction and containment") {
  const Ball a = Ball::from(7L, 64);
  CHECK(a.is_exact());
  CHECK(a.contains(ExactInt(7)));
  CHECK_FALSE(a.contains(ExactInt(8)));
  const Ball third = Ball::from(make_rational(1, 3), 64);
  CHECK(third.contains(make_rational(1, 3)));
  CHECK_FALSE(third.is_exact());
  const Ball tenth = Ball::from_decimal("0.1", 80);
  CHECK(tenth.contains(make_rational(1, 10)));
  const Ball big = Ball::from_decimal("-12.5e3", 80);
  CHECK(big.contains(ExactRational(-12500)));
  CHECK_THROWS(Ball::from_decimal("1.2.3", 64));
}

TEST_CASE("arithmetic encloses exact rational results") {
  Sampler s;
  for (int i = 0; i < 300; ++i) {
    const mpfr_prec_t p = 64 + 32 * (i % 5);
    const ExactRational x = s.rational(-50, 50), y = s.rational(-50, 50);
    auto [bx, px] = s.ball_around(x, p);
    auto [by, py] = s.ball_around(y, p);
    CHECK((bx + by).contains(px + py));
    CHECK((bx - by).contains(px - py));
    CHECK((bx * by).contains(px * py));
    if (!by.contains(ExactInt(0))) CHECK((bx / by).contains(px / py));
    CHECK((bx * 37L).contains(px * 37));
    CHECK((bx / 13L).contains(px / 13));
    CHECK((-bx).contains(-px));
    CHECK(pow(bx, 5L).contains(px * px * px * px * px));
  }
}

TEST_CASE("self-aliased operations") {
  Ball a = Ball::from(make_rational(3, 7), 128);
  a /= a;
  CHECK(a.contains(ExactInt(1)));
  Ball b = Ball::from(make_rational(3, 7), 128);
  b *= b;
  CHECK(b.contains(make_rational(9, 49)));
  Ball c = Ball::from(make_rational(3, 7), 128);
  c -= c;
  CHECK(c.contains(ExactInt(0)));
}

TEST_CASE("elementary functions enclose a high-precision reference") {
  Sampler s;
  const std::vector<std::pair<RefFn, std::function<Ball(const Ball&)>>> positive{
      {mpfr_sqrt, [](const Ball& b) { return sqrt(b); }},
      {mpfr_log, [](const Ball& b) { return log(b); }},
  };
  const std::vector<std::pair<RefFn, std::function<Ball(const Ball&)>>> any{
      {mpfr_exp, [](const Ball& b) { return exp(b); }},
      {mpfr_sin, [](const Ball& b) { return sin(b); }},
      {mpfr_cos, [](const Ball& b) { return cos(b); }},
      {mpfr_sinh, [](const Ball& b) { return sinh(b); }},
      {mpfr_cosh, [](const Ball& b) { return cosh(b); }},
  };
  for (int i = 0; i < 200; ++i) {
    const mpfr_prec_t p = 64 + 64 * (i % 3);
    const ExactRational x = s.rational(-30, 30);
    auto [bx, px] = s.ball_around(x, p);
    for (const auto& [ref, f] : any) CHECK(f(bx).contains(reference(ref, px)));
    const ExactRational y = abs(x) + 1;
    auto [by, py] = s.ball_around(y, p);
    for (const auto& [ref, f] : positive) CHECK(f(by).contains(reference(ref, py)));
  }
}

TEST_CASE("rational powers") {
  const Ball two = Ball::from(2L, 128);
  CHECK(pow(two, make_rational(3)).contains(ExactInt(8)));
  CHECK(pow(two, make_rational(-2)).contains(make_rational(1, 4)));
  const Ball sixteen = Ball::from(16L, 128);
  CHECK(pow(sixteen, make_rational(3, 4)).contains(ExactInt(8)));
  CHECK(pow(sixteen, make_rational(-1, 2)).contains(make_rational(1, 4)));
}

TEST_CASE("pi enclosure") {
  const Ball pi = pi_ball(256);
  // 3.14159265358979323846264338327950288419716939937510 truncated / rounded up
  CHECK(pi.contains(make_rational(314159265358979323L, 100000000000000000L)) == false);
  mpq_class lo("3141592653589793238462643383279502884197/1000000000000000000000000000000000000000");
  mpq_class hi("3141592653589793238462643383279502884198/1000000000000000000000000000000000000000");
  CHECK(certainly_less(Ball::from(ExactRational(lo), 256), pi));
  CHECK(certainly_less(pi, Ball::from(ExactRational(hi), 256)));
}

TEST_CASE("comparisons and integer isolation") {
  Ball a = Ball::from(make_rational(5, 2), 64);
  a.add_error_2exp(-4);
  ExactInt z;
  CHECK_FALSE(unique_integer(a, z));
  Ball b = Ball::from(make_rational(41, 10), 64);
  b.add_error_2exp(-3);
  REQUIRE(unique_integer(b, z));
  CHECK(z == 4);
  Ball wide = Ball::from(ExactInt(4), 64);
  wide.add_error_2exp(1);
  CHECK_FALSE(unique_integer(wide, z));
  CHECK(certainly_less(Ball::from(1L, 64), Ball::from(2L, 64)));
  CHECK_FALSE(certainly_less(wide, Ball::from(5L, 64)));
  CHECK(certainly_less_equal(Ball::from(2L, 64), Ball::from(2L, 64)));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(log(Ball::from(-1L, 64)), DomainError);
  CHECK_THROWS_AS(Ball::from(1L, 64) / Ball::from(0L, 64), DomainError);
}

TEST_CASE("certified value enclosure") {
  CertifiedValue v{Ball::from(10L, 64), Ball::from(make_rational(1, 2), 64)};
  CHECK(v.contains(ExactInt(10)));
  CHECK(v.enclosure().contains(make_rational(21, 2)));
  CHECK_FALSE(v.contains(ExactInt(11)));
}

TEST_CASE("default precision rule") {
  // ceil(4 pi sqrt(n) / ln 2) + 64
  CHECK(default_precision(1) == 83);
  CHECK(default_precision(10000) == static_cast<mpfr_prec_t>(std::ceil(400 * M_PI / std::log(2.0))) + 64);
}
