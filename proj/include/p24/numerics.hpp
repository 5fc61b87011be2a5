#pragma once

#include <gmpxx.h>

#include <string>

namespace p24 {

using ExactInt = mpz_class;
// mpq_class keeps numerator/denominator canonical (den > 0, coprime) after
// every arithmetic operation, which is the ExactRational contract.
using ExactRational = mpq_class;

ExactRational make_rational(long num, long den = 1);
ExactRational make_rational(const ExactInt& num, const ExactInt& den);

// (b)_m = b(b+1)...(b+m-1); 1 for m == 0.
ExactRational rising_factorial(const ExactRational& b, unsigned m);

// b(b-1)...(b-m+1)/m!; 1 for m == 0.
ExactRational general_binomial(const ExactRational& b, unsigned m);

ExactInt factorial(unsigned m);
ExactInt binomial(unsigned n, unsigned k);

// Decimal rendering: "p" or "p/q".
std::string to_string(const ExactRational& q);
std::string to_string(const ExactInt& z);

}  // namespace p24
