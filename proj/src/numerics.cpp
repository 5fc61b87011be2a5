#include "p24/numerics.hpp"

#include "p24/errors.hpp"

namespace p24 {

ExactRational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactRational rising_factorial(const ExactRational& b, unsigned m) {
  ExactRational acc(1);
  ExactRational term = b;
  for (unsigned j = 0; j < m; ++j) {
    acc *= term;
    term += 1;
  }
  return acc;
}

ExactRational general_binomial(const ExactRational& b, unsigned m) {
  ExactRational acc(1);
  ExactRational term = b;
  for (unsigned j = 1; j <= m; ++j) {
    acc *= term;
    acc /= j;
    term -= 1;
  }
  return acc;
}

ExactInt factorial(unsigned m) {
  ExactInt out;
  mpz_fac_ui(out.get_mpz_t(), m);
  return out;
}

ExactInt binomial(unsigned n, unsigned k) {
  ExactInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string to_string(const ExactRational& q) { return q.get_str(10); }

std::string to_string(const ExactInt& z) { return z.get_str(10); }

}  // namespace p24
