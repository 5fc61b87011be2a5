#include "p24/ball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "p24/errors.hpp"

namespace p24 {
namespace {

constexpr mpfr_prec_t kRadPrec = Ball::kRadiusPrecision;

// RAII scratch float.
class Scratch {
 public:
  explicit Scratch(mpfr_prec_t p) { mpfr_init2(v_, p); }
  ~Scratch() { mpfr_clear(v_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }
  // The mpfr predicate macros dereference their argument directly.
  mpfr_ptr operator->() { return v_; }

 private:
  mpfr_t v_;
};

// rad += bound on the error of a round-to-nearest result.
void add_rounding_error(mpfr_ptr rad, mpfr_srcptr mid, int ternary) {
  if (ternary == 0 || mpfr_zero_p(mid) || !mpfr_number_p(mid)) return;
  Scratch err(kRadPrec);
  mpfr_set_ui_2exp(err, 1, mpfr_get_exp(mid) - mpfr_get_prec(mid), MPFR_RNDU);
  mpfr_add(rad, rad, err, MPFR_RNDU);
}

void abs_up(mpfr_ptr out, mpfr_srcptr x) { mpfr_abs(out, x, MPFR_RNDU); }

using Fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// Monotone increasing f on [dom_lo, inf): evaluate at outward-rounded
// endpoints.
Ball monotone_increasing(const Ball& x, Fn f, bool clamp_at_zero) {
  const mpfr_prec_t p = x.precision();
  Scratch lo_in(p + 8), hi_in(p + 8), lo(p), hi(p);
  x.lower(lo_in);
  x.upper(hi_in);
  if (clamp_at_zero && mpfr_sgn(lo_in) < 0) mpfr_set_zero(lo_in, 1);
  f(lo, lo_in, MPFR_RNDD);
  f(hi, hi_in, MPFR_RNDU);
  return Ball::from_endpoints(lo, hi, p);
}

}  // namespace

Ball::Ball() : Ball(64) {}

Ball::Ball(mpfr_prec_t precision) {
  mpfr_init2(mid_, precision);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& other) {
  mpfr_init2(mid_, other.precision());
  mpfr_init2(rad_, kRadPrec);
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& other) noexcept : Ball(other.precision()) {
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
}

Ball& Ball::operator=(const Ball& other) {
  if (this == &other) return *this;
  mpfr_set_prec(mid_, other.precision());
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
  return *this;
}

Ball& Ball::operator=(Ball&& other) noexcept {
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
  return *this;
}

Ball::~Ball() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

Ball Ball::from(long value, mpfr_prec_t precision) {
  Ball b(precision);
  int t = mpfr_set_si(b.mid_, value, MPFR_RNDN);
  add_rounding_error(b.rad_, b.mid_, t);
  return b;
}

Ball Ball::from(const ExactInt& value, mpfr_prec_t precision) {
  Ball b(precision);
  int t = mpfr_set_z(b.mid_, value.get_mpz_t(), MPFR_RNDN);
  add_rounding_error(b.rad_, b.mid_, t);
  return b;
}

Ball Ball::from(const ExactRational& value, mpfr_prec_t precision) {
  Ball b(precision);
  int t = mpfr_set_q(b.mid_, value.get_mpq_t(), MPFR_RNDN);
  add_rounding_error(b.rad_, b.mid_, t);
  return b;
}

Ball Ball::from_decimal(const std::string& text, mpfr_prec_t precision) {
  Ball b(precision);
  if (mpfr_set_str(b.mid_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("not a decimal number: " + text);
  }
  // The conversion is correctly rounded but reports no ternary value.
  add_rounding_error(b.rad_, b.mid_, 1);
  return b;
}

Ball Ball::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t precision) {
  if (mpfr_cmp(lo, hi) > 0) throw DomainError("ball endpoints out of order");
  Ball b(precision);
  Scratch sum(precision + 1);
  mpfr_add(sum, lo, hi, MPFR_RNDN);
  mpfr_div_2ui(sum, sum, 1, MPFR_RNDN);
  mpfr_set(b.mid_, sum, MPFR_RNDN);
  Scratch d1(kRadPrec), d2(kRadPrec);
  mpfr_sub(d1, hi, b.mid_, MPFR_RNDU);
  mpfr_sub(d2, b.mid_, lo, MPFR_RNDU);
  mpfr_max(b.rad_, d1, d2, MPFR_RNDU);
  if (mpfr_sgn(b.rad_) < 0) mpfr_set_zero(b.rad_, 1);
  return b;
}

void Ball::lower(mpfr_ptr out) const { mpfr_sub(out, mid_, rad_, MPFR_RNDD); }

void Ball::upper(mpfr_ptr out) const { mpfr_add(out, mid_, rad_, MPFR_RNDU); }

void Ball::abs_upper(mpfr_ptr out) const {
  Scratch a(mpfr_get_prec(out));
  mpfr_abs(a, mid_, MPFR_RNDU);
  mpfr_add(out, a, rad_, MPFR_RNDU);
}

bool Ball::contains(const ExactInt& z) const {
  Scratch lo(precision() + 8), hi(precision() + 8);
  lower(lo);
  upper(hi);
  return mpfr_cmp_z(lo, z.get_mpz_t()) <= 0 && mpfr_cmp_z(hi, z.get_mpz_t()) >= 0;
}

bool Ball::contains(const ExactRational& q) const {
  Scratch lo(precision() + 8), hi(precision() + 8);
  lower(lo);
  upper(hi);
  return mpfr_cmp_q(lo, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi, q.get_mpq_t()) >= 0;
}

bool Ball::contains(const Ball& inner) const {
  const mpfr_prec_t p = std::max(precision(), inner.precision()) + 8;
  Scratch lo(p), hi(p), ilo(p), ihi(p);
  lower(lo);
  upper(hi);
  // Inner endpoints rounded outward as well: containment is then certain.
  inner.lower(ilo);
  inner.upper(ihi);
  return mpfr_cmp(lo, ilo) <= 0 && mpfr_cmp(ihi, hi) <= 0;
}

bool Ball::overlaps(const Ball& other) const {
  return !certainly_less(*this, other) && !certainly_less(other, *this);
}

bool Ball::is_positive() const {
  Scratch lo(precision() + 8);
  lower(lo);
  return mpfr_sgn(lo) > 0;
}

bool Ball::is_negative() const {
  Scratch hi(precision() + 8);
  upper(hi);
  return mpfr_sgn(hi) < 0;
}

bool Ball::is_finite() const { return mpfr_number_p(mid_) && mpfr_number_p(rad_); }

double Ball::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

double Ball::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

double Ball::log2_radius() const {
  if (mpfr_zero_p(rad_)) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double m = mpfr_get_d_2exp(&exp, rad_, MPFR_RNDU);
  return std::log2(m) + static_cast<double>(exp);
}

std::string Ball::mid_string(int digits) const {
  if (digits <= 0) digits = static_cast<int>(static_cast<double>(precision()) * 0.30103) + 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, mid_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string Ball::rad_string() const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.6RUe", rad_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string Ball::upper_string(int digits) const {
  Scratch hi(precision() + 8);
  upper(hi);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RUe", digits - 1, hi.get());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Ball& Ball::add_error(const Ball& error) {
  Scratch e(kRadPrec);
  error.abs_upper(e);
  mpfr_add(rad_, rad_, e, MPFR_RNDU);
  return *this;
}

Ball& Ball::add_error_2exp(long exponent) {
  Scratch e(kRadPrec);
  mpfr_set_ui_2exp(e, 1, exponent, MPFR_RNDU);
  mpfr_add(rad_, rad_, e, MPFR_RNDU);
  return *this;
}

Ball Ball::with_precision(mpfr_prec_t p) const {
  Ball b(p);
  int t = mpfr_set(b.mid_, mid_, MPFR_RNDN);
  mpfr_set(b.rad_, rad_, MPFR_RNDU);
  add_rounding_error(b.rad_, b.mid_, t);
  return b;
}

Ball Ball::operator-() const {
  Ball b(*this);
  mpfr_neg(b.mid_, b.mid_, MPFR_RNDN);
  return b;
}

Ball& Ball::operator+=(const Ball& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(mid_, rhs.precision(), MPFR_RNDN);
  int t = mpfr_add(mid_, mid_, rhs.mid_, MPFR_RNDN);
  mpfr_add(rad_, rad_, rhs.rad_, MPFR_RNDU);
  add_rounding_error(rad_, mid_, t);
  return *this;
}

Ball& Ball::operator-=(const Ball& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(mid_, rhs.precision(), MPFR_RNDN);
  int t = mpfr_sub(mid_, mid_, rhs.mid_, MPFR_RNDN);
  mpfr_add(rad_, rad_, rhs.rad_, MPFR_RNDU);
  add_rounding_error(rad_, mid_, t);
  return *this;
}

Ball& Ball::operator*=(const Ball& rhs) {
  Scratch a(kRadPrec), b(kRadPrec), cross(kRadPrec), tmp(kRadPrec);
  abs_up(a, mid_);
  abs_up(b, rhs.mid_);
  // |ma| rb + |mb| ra + ra rb
  mpfr_mul(cross, a, rhs.rad_, MPFR_RNDU);
  mpfr_mul(tmp, b, rad_, MPFR_RNDU);
  mpfr_add(cross, cross, tmp, MPFR_RNDU);
  mpfr_mul(tmp, rad_, rhs.rad_, MPFR_RNDU);
  mpfr_add(cross, cross, tmp, MPFR_RNDU);
  if (rhs.precision() > precision()) mpfr_prec_round(mid_, rhs.precision(), MPFR_RNDN);
  int t = mpfr_mul(mid_, mid_, rhs.mid_, MPFR_RNDN);
  mpfr_set(rad_, cross, MPFR_RNDU);
  add_rounding_error(rad_, mid_, t);
  return *this;
}

Ball& Ball::operator/=(const Ball& rhs) {
  Scratch denom(kRadPrec), tmp(kRadPrec), q(kRadPrec), bl(kRadPrec), rb(kRadPrec);
  mpfr_abs(bl, rhs.mid_, MPFR_RNDD);
  mpfr_set(rb, rhs.rad_, MPFR_RNDU);
  mpfr_abs(denom, rhs.mid_, MPFR_RNDD);
  mpfr_sub(denom, denom, rhs.rad_, MPFR_RNDD);
  if (mpfr_sgn(denom) <= 0) throw DomainError("division by a ball containing zero");
  if (rhs.precision() > precision()) mpfr_prec_round(mid_, rhs.precision(), MPFR_RNDN);
  Scratch num_mid(precision());
  mpfr_set(num_mid, mid_, MPFR_RNDN);
  int t = mpfr_div(mid_, mid_, rhs.mid_, MPFR_RNDN);
  // (ra + |ma/mb| rb) / (|mb| - rb)
  mpfr_abs(q, num_mid, MPFR_RNDU);
  mpfr_div(q, q, bl, MPFR_RNDU);
  mpfr_mul(tmp, q, rb, MPFR_RNDU);
  mpfr_add(tmp, tmp, rad_, MPFR_RNDU);
  mpfr_div(rad_, tmp, denom, MPFR_RNDU);
  add_rounding_error(rad_, mid_, t);
  return *this;
}

Ball& Ball::operator*=(long rhs) {
  int t = mpfr_mul_si(mid_, mid_, rhs, MPFR_RNDN);
  mpfr_mul_ui(rad_, rad_, static_cast<unsigned long>(rhs < 0 ? -rhs : rhs), MPFR_RNDU);
  add_rounding_error(rad_, mid_, t);
  return *this;
}

Ball& Ball::operator/=(long rhs) {
  if (rhs == 0) throw DomainError("division by zero");
  int t = mpfr_div_si(mid_, mid_, rhs, MPFR_RNDN);
  mpfr_div_ui(rad_, rad_, static_cast<unsigned long>(rhs < 0 ? -rhs : rhs), MPFR_RNDU);
  add_rounding_error(rad_, mid_, t);
  return *this;
}

Ball& Ball::operator+=(long rhs) {
  int t = mpfr_add_si(mid_, mid_, rhs, MPFR_RNDN);
  add_rounding_error(rad_, mid_, t);
  return *this;
}

bool certainly_less(const Ball& a, const Ball& b) {
  const mpfr_prec_t p = std::max(a.precision(), b.precision()) + 8;
  Scratch ah(p), bl(p);
  a.upper(ah);
  b.lower(bl);
  return mpfr_cmp(ah, bl) < 0;
}

bool certainly_less_equal(const Ball& a, const Ball& b) {
  const mpfr_prec_t p = std::max(a.precision(), b.precision()) + 8;
  Scratch ah(p), bl(p);
  a.upper(ah);
  b.lower(bl);
  return mpfr_cmp(ah, bl) <= 0;
}

Ball abs(const Ball& x) {
  Ball b(x);
  mpfr_abs(b.mutable_mid(), b.mid(), MPFR_RNDN);
  return b;
}

Ball sqrt(const Ball& x) {
  if (x.is_negative()) throw DomainError("sqrt of a negative ball");
  return monotone_increasing(x, &mpfr_sqrt, true);
}

Ball exp(const Ball& x) { return monotone_increasing(x, &mpfr_exp, false); }

Ball log(const Ball& x) {
  if (!x.is_positive()) throw DomainError("log of a ball not certainly positive");
  return monotone_increasing(x, &mpfr_log, false);
}

Ball cosh(const Ball& x) {
  Ball e = exp(x);
  Ball one = Ball::from(1L, x.precision());
  Ball r = (e + one / e) / 2;
  return r;
}

Ball sinh(const Ball& x) {
  Ball e = exp(x);
  Ball one = Ball::from(1L, x.precision());
  return (e - one / e) / 2;
}

namespace {

// cos and sin are 1-Lipschitz.
Ball lipschitz_one(const Ball& x, Fn f) {
  Ball b(x.precision());
  int t = f(b.mutable_mid(), x.mid(), MPFR_RNDN);
  mpfr_set(b.mutable_rad(), x.rad(), MPFR_RNDU);
  add_rounding_error(b.mutable_rad(), b.mid(), t);
  return b;
}

}  // namespace

Ball cos(const Ball& x) { return lipschitz_one(x, &mpfr_cos); }

Ball sin(const Ball& x) { return lipschitz_one(x, &mpfr_sin); }

Ball pow(const Ball& base, long exponent) {
  if (exponent < 0) return Ball::from(1L, base.precision()) / pow(base, -exponent);
  Ball result = Ball::from(1L, base.precision());
  Ball sq = base;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= sq;
    e >>= 1;
    if (e != 0) sq *= sq;
  }
  return result;
}

Ball pow(const Ball& base, const ExactRational& exponent) {
  if (exponent.get_den() == 1 && exponent.get_num().fits_slong_p()) {
    return pow(base, exponent.get_num().get_si());
  }
  return exp(log(base) * Ball::from(exponent, base.precision()));
}

Ball pi_ball(mpfr_prec_t precision) {
  Ball b(precision);
  int t = mpfr_const_pi(b.mutable_mid(), MPFR_RNDN);
  add_rounding_error(b.mutable_rad(), b.mid(), t);
  return b;
}

mpfr_prec_t default_precision(long n) {
  if (n < 1) n = 1;
  const double bits = 4.0 * M_PI * std::sqrt(static_cast<double>(n)) / std::log(2.0);
  return static_cast<mpfr_prec_t>(std::ceil(bits)) + 64;
}

Ball CertifiedValue::enclosure() const {
  Ball e = value;
  e.add_error(bound);
  return e;
}

bool unique_integer(const Ball& x, ExactInt& out) {
  Scratch lo(x.precision() + 8), hi(x.precision() + 8);
  x.lower(lo);
  x.upper(hi);
  if (!mpfr_number_p(lo) || !mpfr_number_p(hi)) return false;
  ExactInt c, f;
  mpfr_ceil(lo, lo);
  mpfr_floor(hi, hi);
  mpfr_get_z(c.get_mpz_t(), lo, MPFR_RNDN);
  mpfr_get_z(f.get_mpz_t(), hi, MPFR_RNDN);
  if (c != f) return false;
  out = c;
  return true;
}

}  // namespace p24
