#pragma once

#include <mpfr.h>

#include <string>

#include "p24/numerics.hpp"

namespace p24 {

// Midpoint-radius real enclosure. The midpoint carries the working precision;
// the radius is a 64-bit float that is only ever rounded upward, so every
// operation returns a ball containing the exact image of its inputs.
class Ball {
 public:
  static constexpr mpfr_prec_t kRadiusPrecision = 64;

  Ball();
  explicit Ball(mpfr_prec_t precision);
  Ball(const Ball& other);
  Ball(Ball&& other) noexcept;
  Ball& operator=(const Ball& other);
  Ball& operator=(Ball&& other) noexcept;
  ~Ball();

  static Ball from(long value, mpfr_prec_t precision);
  static Ball from(const ExactInt& value, mpfr_prec_t precision);
  static Ball from(const ExactRational& value, mpfr_prec_t precision);
  // Parses a decimal literal; the result encloses the exact decimal value.
  static Ball from_decimal(const std::string& text, mpfr_prec_t precision);
  // Ball [lo, hi]; requires lo <= hi.
  static Ball from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t precision);

  mpfr_prec_t precision() const { return mpfr_get_prec(mid_); }
  mpfr_srcptr mid() const { return mid_; }
  mpfr_srcptr rad() const { return rad_; }

  // Endpoints, rounded outward into `out` (which keeps its own precision).
  void lower(mpfr_ptr out) const;
  void upper(mpfr_ptr out) const;
  // Upper bound of |x| over the ball.
  void abs_upper(mpfr_ptr out) const;

  bool contains(const ExactInt& z) const;
  bool contains(const ExactRational& q) const;
  bool contains(const Ball& inner) const;
  bool overlaps(const Ball& other) const;
  bool is_positive() const;
  bool is_negative() const;
  bool is_finite() const;
  bool is_exact() const { return mpfr_zero_p(rad_) != 0; }

  double mid_double() const;
  double rad_double() const;
  // log2 of the radius (or -inf for exact balls).
  double log2_radius() const;

  // Decimal strings. `digits == 0` selects enough digits for the precision.
  std::string mid_string(int digits = 0) const;
  std::string rad_string() const;
  std::string upper_string(int digits = 20) const;

  // Widens the radius by an upper bound on |error|.
  Ball& add_error(const Ball& error);
  Ball& add_error_2exp(long exponent);
  Ball with_precision(mpfr_prec_t precision) const;

  Ball operator-() const;
  Ball& operator+=(const Ball& rhs);
  Ball& operator-=(const Ball& rhs);
  Ball& operator*=(const Ball& rhs);
  Ball& operator/=(const Ball& rhs);
  Ball& operator*=(long rhs);
  Ball& operator/=(long rhs);
  Ball& operator+=(long rhs);

  friend Ball operator+(Ball lhs, const Ball& rhs) { return lhs += rhs; }
  friend Ball operator-(Ball lhs, const Ball& rhs) { return lhs -= rhs; }
  friend Ball operator*(Ball lhs, const Ball& rhs) { return lhs *= rhs; }
  friend Ball operator/(Ball lhs, const Ball& rhs) { return lhs /= rhs; }
  friend Ball operator*(Ball lhs, long rhs) { return lhs *= rhs; }
  friend Ball operator*(long lhs, Ball rhs) { return rhs *= lhs; }
  friend Ball operator/(Ball lhs, long rhs) { return lhs /= rhs; }
  friend Ball operator+(Ball lhs, long rhs) { return lhs += rhs; }
  friend Ball operator-(Ball lhs, long rhs) { return lhs += -rhs; }

  // Raw access for the implementation of the elementary functions.
  mpfr_ptr mutable_mid() { return mid_; }
  mpfr_ptr mutable_rad() { return rad_; }

 private:
  mpfr_t mid_;
  mpfr_t rad_;
};

// Certified comparisons: true only when the balls are disjoint in order.
bool certainly_less(const Ball& a, const Ball& b);
bool certainly_less_equal(const Ball& a, const Ball& b);

Ball abs(const Ball& x);
Ball sqrt(const Ball& x);
Ball exp(const Ball& x);
Ball log(const Ball& x);
Ball cosh(const Ball& x);
Ball sinh(const Ball& x);
Ball cos(const Ball& x);
Ball sin(const Ball& x);
Ball pow(const Ball& base, long exponent);
// base^q for base > 0.
Ball pow(const Ball& base, const ExactRational& exponent);

Ball pi_ball(mpfr_prec_t precision);

// ceil(4 pi sqrt(n) / ln 2) + 64: enough bits to carry e^{4 pi sqrt n} with
// guard bits to spare.
mpfr_prec_t default_precision(long n);

// Truncated evaluation with a certified remainder: the true quantity lies in
// value +- bound.upper().
struct CertifiedValue {
  Ball value;
  Ball bound;

  // value widened by bound; the enclosure of the true quantity.
  Ball enclosure() const;
  bool contains(const ExactInt& z) const { return enclosure().contains(z); }
};

// Unique integer inside the ball, if exactly one exists.
bool unique_integer(const Ball& x, ExactInt& out);

}  // namespace p24
