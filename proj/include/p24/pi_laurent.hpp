#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "p24/ball.hpp"
#include "p24/numerics.hpp"

namespace p24 {

// Finite sum  sum_j q_j pi^j  with rational q_j and integer j (possibly
// negative). Zero coefficients are never stored, so structural equality is
// exact equality of the represented numbers as formal Laurent polynomials.
class PiLaurent {
 public:
  using Terms = std::map<int, ExactRational>;

  PiLaurent() = default;
  PiLaurent(const ExactRational& constant);  // NOLINT: implicit rational embedding
  PiLaurent(long constant);                  // NOLINT
  static PiLaurent monomial(int pi_power, const ExactRational& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ExactRational coeff(int pi_power) const;
  // Lowest / highest stored power; 0 for the zero element.
  int min_power() const;
  int max_power() const;

  PiLaurent& operator+=(const PiLaurent& rhs);
  PiLaurent& operator-=(const PiLaurent& rhs);
  PiLaurent& operator*=(const PiLaurent& rhs);
  PiLaurent& operator*=(const ExactRational& rhs);

  friend PiLaurent operator+(PiLaurent a, const PiLaurent& b) { return a += b; }
  friend PiLaurent operator-(PiLaurent a, const PiLaurent& b) { return a -= b; }
  friend PiLaurent operator*(const PiLaurent& a, const PiLaurent& b);
  friend PiLaurent operator*(PiLaurent a, const ExactRational& b) { return a *= b; }
  friend PiLaurent operator*(const ExactRational& b, PiLaurent a) { return a *= b; }
  PiLaurent operator-() const;
  // Multiplies by pi^k.
  PiLaurent shifted(int k) const;

  friend bool operator==(const PiLaurent& a, const PiLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PiLaurent& a, const PiLaurent& b) { return !(a == b); }

  // Evaluation at an enclosure of pi: Horner in pi^2 on the even and odd parts
  // separately, then one multiplication by pi^{min_power}.
  Ball evaluate(const Ball& pi) const;
  Ball evaluate(mpfr_prec_t precision) const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static PiLaurent from_json(const nlohmann::json& j);

 private:
  void add_term(int power, const ExactRational& c);
  Terms terms_;
};

}  // namespace p24
