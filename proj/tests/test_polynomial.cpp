#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "p24/polynomial.hpp"

using namespace p24;
using namespace p24::poly;

namespace {

using Cx = std::complex<long double>;

// Aberth-Ehrlich iteration on the monic normalization; test-only oracle.
std::vector<Cx> aberth_roots(const IntPoly& p) {
  const long d = degree(p);
  std::vector<long double> c(p.size());
  const long double lead = p.back().get_d();
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = p[i].get_d() / lead;
  long double radius = 0;
  for (long i = 0; i < d; ++i) radius = std::max(radius, std::pow(std::fabs(c[i]), 1.0L / (d - i)));
  radius = 2 * radius + 1;
  std::vector<Cx> z(static_cast<std::size_t>(d));
  for (long i = 0; i < d; ++i) z[i] = std::polar(radius, 2 * M_PIl * (i + 0.25L) / d);
  auto eval = [&](Cx x, Cx& dp) {
    Cx v = 0;
    dp = 0;
    for (long i = d; i >= 0; --i) {
      dp = dp * x + v;
      v = v * x + c[i];
    }
    return v;
  };
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (long i = 0; i < d; ++i) {
      Cx dp;
      const Cx v = eval(z[i], dp);
      if (std::abs(v) == 0) continue;
      const Cx ratio = v / dp;
      Cx s = 0;
      for (long j = 0; j < d; ++j) {
        if (j != i) s += 1.0L / (z[i] - z[j]);
      }
      const Cx w = ratio / (1.0L - ratio * s);
      z[i] -= w;
      change = std::max(change, std::abs(w));
    }
    if (change < 1e-16L) break;
  }
  return z;
}

// Distinct real roots per the oracle, clustering near-equal values.
long oracle_distinct_real(const IntPoly& p) {
  auto roots = aberth_roots(p);
  std::vector<long double> reals;
  for (const auto& r : roots) {
    if (std::fabs(r.imag()) < 1e-7L * (1 + std::abs(r))) reals.push_back(r.real());
  }
  std::sort(reals.begin(), reals.end());
  long count = 0;
  for (std::size_t i = 0; i < reals.size(); ++i) {
    if (i == 0 || reals[i] - reals[i - 1] > 1e-6L * (1 + std::fabs(reals[i]))) ++count;
  }
  return count;
}

IntPoly from_roots(const std::vector<long>& roots, long lead) {
  IntPoly p{ExactInt(lead)};
  for (long r : roots) {
    IntPoly q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= p[i] * r;
    }
    p = q;
  }
  return p;
}

IntPoly times(const IntPoly& a, const IntPoly& b) {
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace

TEST_CASE("basic hyperbolicity") {
  CHECK(is_hyperbolic({ExactInt(-1), ExactInt(0), ExactInt(1)}));
  CHECK_FALSE(is_hyperbolic({ExactInt(1), ExactInt(0), ExactInt(1)}));
  CHECK(is_hyperbolic({ExactInt(5), ExactInt(3)}));
  CHECK(count_real_roots({ExactInt(-1), ExactInt(0), ExactInt(1)}) == 2);
  CHECK(count_real_roots({ExactInt(1), ExactInt(0), ExactInt(1)}) == 0);
  // (x-1)^2 (x+2): distinct real roots 2, hyperbolic
  const IntPoly p = from_roots({1, 1, -2}, 3);
  CHECK(count_real_roots(p) == 2);
  CHECK(is_hyperbolic(p));
}

TEST_CASE("gcd, square-free part and exact quotient") {
  const IntPoly a = from_roots({1, 2, 2, 5}, 2);
  const IntPoly b = from_roots({2, 5, 7}, 3);
  const IntPoly g = gcd(a, b);
  CHECK(degree(g) == 2);
  CHECK(g == primitive_part(from_roots({2, 5}, 1)));
  CHECK(degree(square_free_part(a)) == 3);
  CHECK(exact_quotient(times(a, b), b) == a);
  CHECK(derivative({ExactInt(4), ExactInt(3), ExactInt(2)}) == IntPoly{ExactInt(3), ExactInt(4)});
  CHECK(content({ExactInt(6), ExactInt(-9), ExactInt(12)}) == 3);
}

TEST_CASE("real-root counts match an Aberth oracle on random polynomials") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> deg(1, 8);
  std::uniform_int_distribution<long> coef(-20, 20);
  int tested = 0;
  while (tested < 50) {
    IntPoly p(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& c : p) c = coef(rng);
    if (p.back() == 0 || p[0] == 0) continue;
    CHECK(count_real_roots(p) == oracle_distinct_real(p));
    ++tested;
  }
}

TEST_CASE("products of known real and complex factors") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> root(-30, 30), q(1, 9);
  for (int i = 0; i < 40; ++i) {
    std::vector<long> rs;
    for (int j = 0; j < 1 + i % 5; ++j) rs.push_back(root(rng));
    IntPoly p = from_roots(rs, 1 + i % 3);
    std::sort(rs.begin(), rs.end());
    const long distinct = std::unique(rs.begin(), rs.end()) - rs.begin();
    CHECK(count_real_roots(p) == distinct);
    CHECK(is_hyperbolic(p));
    // Multiply by x^2 + q > 0: two complex roots appear.
    const IntPoly withc = times(p, {ExactInt(q(rng)), ExactInt(0), ExactInt(1)});
    CHECK(count_real_roots(withc) == distinct);
    CHECK_FALSE(is_hyperbolic(withc));
  }
}
