#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "p24/ball.hpp"
#include "p24/numerics.hpp"
#include "p24/seqcore.hpp"

namespace p24::rademacher {

// Candidate conventions for A_{k,24}(n,0) as a classical Kloosterman sum
// S(a, b; k) with a = +-(n-1), b = +-1.
enum class Variant { MinusOne, PlusOne, NegMinusOne, NegPlusOne };

inline constexpr Variant kAllVariants[] = {Variant::MinusOne, Variant::PlusOne, Variant::NegMinusOne,
                                           Variant::NegPlusOne};

// Fixed by calibrate() against the exact table: S(n-1, -1; k).
inline constexpr Variant kSelectedVariant = Variant::MinusOne;

std::string variant_name(Variant v);
// S(a,b;k) = S(-a,-b;k), so variants come in pairs with identical values.
Variant alias_of(Variant v);

struct ComplexBall {
  Ball re;
  Ball im;
};

// S(a, b; k) = sum_{h mod k, gcd(h,k)=1} exp(2 pi i (a h + b hbar)/k).
ComplexBall kloosterman_sum(long a, long b, long k, mpfr_prec_t precision);

// A_{k,24}(n, 0) as a real ball; exactly 1 for k = 1.
Ball kloosterman(long k, long n, mpfr_prec_t precision = 128, Variant v = kSelectedVariant);

// 2 pi (n-1)^{-13/2} sum_{k=1}^{K} A_k(n)/k I_13(4 pi sqrt(n-1)/k).
Ball exact_formula_partial(long n, long K, mpfr_prec_t precision, Variant v = kSelectedVariant);

// Bound on the k > K remainder of the exact formula via |A_k| <= k.
Ball truncation_tail(long n, long K, mpfr_prec_t precision = 128);

// k = 1 term of the exact formula.
Ball main_term(long n, mpfr_prec_t precision = 0);

// Closed-form bound 2^29 pi^{27/2} e^{x/2} / x^{27/2}, x = 4 pi sqrt(n-1).
Ball R_bound(long n, mpfr_prec_t precision = 0);

// 4 e^{x/2} / (sqrt(pi x) I_13(x)).
Ball G_ratio(long n, mpfr_prec_t precision = 0);

struct Resolution {
  ExactInt value;
  long terms = 0;
  mpfr_prec_t precision = 0;
  Ball partial;
  Ball tail;
};

// Picks K and precision so that radius + tail < 1/2 and returns the unique
// integer in the bracket. Throws ResolutionError if the budget runs out.
Resolution resolve(long n, Variant v = kSelectedVariant);
ExactInt p24_via_rademacher(long n);

struct VariantResult {
  Variant variant;
  bool resolved_all = true;
  long first_failure = -1;
  double max_deviation = 0;
};

struct CalibrationReport {
  long n_lo = 2;
  long n_hi = 60;
  long bracket_log2 = -40;
  std::vector<VariantResult> variants;
  // Value class that resolved every n; empty if none or more than one did.
  std::vector<Variant> accepted;
  bool unique = false;
  Variant selected = kSelectedVariant;

  nlohmann::json to_json() const;
};

// Evaluates every variant over [n_lo, n_hi] with brackets of half-width at
// most 2^bracket_log2 and accepts the variants whose brackets all contain the
// exact value. `unique` holds only when exactly one value class passes and
// it is the class of kSelectedVariant.
CalibrationReport calibrate(long n_lo = 2, long n_hi = 60, long bracket_log2 = -40);

}  // namespace p24::rademacher
