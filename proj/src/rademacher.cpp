#include "p24/rademacher.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "p24/bessel.hpp"
#include "p24/errors.hpp"

namespace p24::rademacher {
namespace {

long mod(long a, long k) {
  long r = a % k;
  return r < 0 ? r + k : r;
}

long inverse_mod(long h, long k) {
  long r0 = k, r1 = mod(h, k), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const long q = r0 / r1;
    long t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return mod(s0, k);
}

void variant_signs(Variant v, long& sa, long& sb) {
  switch (v) {
    case Variant::MinusOne: sa = 1; sb = -1; break;
    case Variant::PlusOne: sa = 1; sb = 1; break;
    case Variant::NegMinusOne: sa = -1; sb = -1; break;
    case Variant::NegPlusOne: sa = -1; sb = 1; break;
  }
}

Ball x_of(long n, mpfr_prec_t p) { return pi_ball(p) * 4 * sqrt(Ball::from(n - 1, p)); }

// (n-1)^{-13/2}
Ball inv_power(long n, mpfr_prec_t p) {
  const Ball m = Ball::from(n - 1, p);
  return Ball::from(1L, p) / (pow(m, 6L) * sqrt(m));
}

mpfr_prec_t auto_precision(long n, mpfr_prec_t p) { return p > 0 ? p : default_precision(n); }

}  // namespace

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::MinusOne: return "S(n-1,-1;k)";
    case Variant::PlusOne: return "S(n-1,+1;k)";
    case Variant::NegMinusOne: return "S(-(n-1),-1;k)";
    case Variant::NegPlusOne: return "S(-(n-1),+1;k)";
  }
  return "?";
}

Variant alias_of(Variant v) {
  switch (v) {
    case Variant::MinusOne: return Variant::NegPlusOne;
    case Variant::PlusOne: return Variant::NegMinusOne;
    case Variant::NegMinusOne: return Variant::PlusOne;
    case Variant::NegPlusOne: return Variant::MinusOne;
  }
  return v;
}

ComplexBall kloosterman_sum(long a, long b, long k, mpfr_prec_t precision) {
  if (k < 1) throw DomainError("kloosterman_sum requires k >= 1");
  const mpfr_prec_t p = precision;
  if (k == 1) return {Ball::from(1L, p), Ball::from(0L, p)};
  std::vector<long> count(static_cast<std::size_t>(k), 0);
  for (long h = 1; h < k; ++h) {
    if (std::gcd(h, k) != 1) continue;
    const long hbar = inverse_mod(h, k);
    const long t = mod(mod(a, k) * h + mod(b, k) * hbar, k);
    ++count[static_cast<std::size_t>(t)];
  }
  const Ball two_pi_over_k = pi_ball(p + 16) * 2 / k;
  Ball re = Ball::from(0L, p);
  Ball im = Ball::from(0L, p);
  for (long t = 0; t < k; ++t) {
    const long c = count[static_cast<std::size_t>(t)];
    if (c == 0) continue;
    if (t == 0) {
      re += Ball::from(c, p);
      continue;
    }
    const Ball angle = (two_pi_over_k * t).with_precision(p);
    re += cos(angle) * c;
    im += sin(angle) * c;
  }
  return {re, im};
}

Ball kloosterman(long k, long n, mpfr_prec_t precision, Variant v) {
  if (k < 1 || n < 1) throw DomainError("kloosterman requires k >= 1 and n >= 1");
  long sa = 0, sb = 0;
  variant_signs(v, sa, sb);
  Ball s = kloosterman_sum(sa * (n - 1), sb, k, precision).re;
  return s;
}

Ball exact_formula_partial(long n, long K, mpfr_prec_t precision, Variant v) {
  if (n < 2) throw DomainError("exact_formula_partial requires n >= 2");
  if (K < 1) throw DomainError("exact_formula_partial requires K >= 1");
  const mpfr_prec_t p = precision;
  const Ball x = x_of(n, p);
  Ball sum = Ball::from(0L, p);
  for (long k = 1; k <= K; ++k) {
    Ball a = kloosterman(k, n, p, v);
    sum += a / k * bessel::bessel_i_series(13, x / k);
  }
  return pi_ball(p) * 2 * inv_power(n, p) * sum;
}

Ball truncation_tail(long n, long K, mpfr_prec_t precision) {
  if (n < 2) throw DomainError("truncation_tail requires n >= 2");
  if (K < 1) throw DomainError("truncation_tail requires K >= 1");
  const mpfr_prec_t p = precision;
  return pi_ball(p) * 2 * inv_power(n, p) * bessel::tail_sum_bound(x_of(n, p), K);
}

Ball main_term(long n, mpfr_prec_t precision) {
  if (n < 2) throw DomainError("main_term requires n >= 2");
  const mpfr_prec_t p = auto_precision(n, precision);
  return pi_ball(p) * 2 * inv_power(n, p) * bessel::bessel_i_series(13, x_of(n, p));
}

Ball R_bound(long n, mpfr_prec_t precision) {
  if (n < 2) throw DomainError("R_bound requires n >= 2");
  const mpfr_prec_t p = auto_precision(n, precision);
  const Ball pi = pi_ball(p);
  const Ball x = x_of(n, p);
  Ball c = pow(Ball::from(2L, p), 29L) * pow(pi, 13L) * sqrt(pi);
  return c * exp(x / 2) / (pow(x, 13L) * sqrt(x));
}

Ball G_ratio(long n, mpfr_prec_t precision) {
  if (n < 2) throw DomainError("G_ratio requires n >= 2");
  const mpfr_prec_t p = auto_precision(n, precision);
  const Ball x = x_of(n, p);
  return exp(x / 2) * 4 / (sqrt(pi_ball(p) * x) * bessel::bessel_i_series(13, x));
}

Resolution resolve(long n, Variant v) {
  if (n < 2) throw DomainError("p24_via_rademacher requires n >= 2");
  const Ball quarter = Ball::from(make_rational(1, 4), 64);
  const double y = 4.0 * M_PI * std::sqrt(static_cast<double>(n - 1));
  long K = std::max(1L, static_cast<long>(std::ceil(y / 8.0)));
  Ball tail = truncation_tail(n, K);
  while (!certainly_less(tail, quarter)) {
    K *= 2;
    if (K > (1L << 16)) throw ResolutionError("truncation tail did not fall below 1/4");
    tail = truncation_tail(n, K);
  }
  mpfr_prec_t p = default_precision(n);
  Ball partial = exact_formula_partial(n, K, p, v);
  while (!(partial.rad_double() < 0.25)) {
    p *= 2;
    if (p > (1L << 18)) throw ResolutionError("partial sum radius did not fall below 1/4");
    partial = exact_formula_partial(n, K, p, v);
  }
  Ball bracket = partial;
  bracket.add_error(tail);
  Resolution r;
  if (!unique_integer(bracket, r.value)) {
    throw ResolutionError("no unique integer in bracket " + bracket.mid_string(30) + " +- " + bracket.rad_string());
  }
  r.terms = K;
  r.precision = p;
  r.partial = partial;
  r.tail = tail;
  return r;
}

ExactInt p24_via_rademacher(long n) { return resolve(n).value; }

nlohmann::json CalibrationReport::to_json() const {
  nlohmann::json j;
  j["variant"] = unique ? variant_name(selected) : "";
  j["tested_range"] = {n_lo, n_hi};
  j["all_resolved"] = unique;
  j["bracket_log2"] = bracket_log2;
  j["variants"] = nlohmann::json::array();
  for (const auto& r : variants) {
    j["variants"].push_back({{"variant", variant_name(r.variant)},
                             {"alias", variant_name(alias_of(r.variant))},
                             {"resolved_all", r.resolved_all},
                             {"first_failure", r.first_failure},
                             {"max_deviation", r.max_deviation}});
  }
  j["accepted"] = nlohmann::json::array();
  for (auto v : accepted) j["accepted"].push_back(variant_name(v));
  return j;
}

CalibrationReport calibrate(long n_lo, long n_hi, long bracket_log2) {
  if (n_lo < 2 || n_hi < n_lo) throw RangeError("calibration range must satisfy 2 <= n_lo <= n_hi");
  CalibrationReport rep;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  rep.bracket_log2 = bracket_log2;
  auto table = seq::extend_table(seq::make_table(24), n_hi);
  for (auto v : kAllVariants) rep.variants.push_back(VariantResult{v});

  Ball limit(64);
  mpfr_set_ui_2exp(limit.mutable_mid(), 1, bracket_log2, MPFR_RNDN);

  for (long n = n_lo; n <= n_hi; ++n) {
    const double y = 4.0 * M_PI * std::sqrt(static_cast<double>(n - 1));
    long K = std::max(1L, static_cast<long>(std::ceil(y / 8.0)));
    Ball tail = truncation_tail(n, K);
    Ball half_limit = limit / 2;
    while (!certainly_less(tail, half_limit)) {
      K *= 2;
      if (K > (1L << 14)) throw CalibrationError("calibration tail did not shrink");
      tail = truncation_tail(n, K);
    }
    const mpfr_prec_t p = default_precision(n) - bracket_log2 + 32;
    const ExactInt& exact = table[n];
    for (auto& r : rep.variants) {
      Ball bracket = exact_formula_partial(n, K, p, r.variant);
      const double dev = std::fabs((bracket - Ball::from(exact, p)).mid_double());
      r.max_deviation = std::max(r.max_deviation, dev);
      bracket.add_error(tail);
      Ball radius = Ball::from(0L, 64);
      mpfr_set(radius.mutable_mid(), bracket.rad(), MPFR_RNDU);
      const bool tight = certainly_less_equal(radius, limit);
      if (!(tight && bracket.contains(exact)) && r.resolved_all) {
        r.resolved_all = false;
        r.first_failure = n;
      }
    }
  }
  for (const auto& r : rep.variants) {
    if (r.resolved_all) rep.accepted.push_back(r.variant);
  }
  rep.unique = rep.accepted.size() == 2 && alias_of(rep.accepted[0]) == rep.accepted[1];
  if (rep.unique) {
    rep.selected = std::min(rep.accepted[0], rep.accepted[1]);
    if (rep.selected != kSelectedVariant) rep.unique = false;
  }
  return rep;
}

}  // namespace p24::rademacher
