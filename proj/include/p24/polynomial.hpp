#pragma once

#include <vector>

#include "p24/numerics.hpp"

namespace p24::poly {

// Dense integer polynomial, coefficient i multiplies x^i. Normalized form has
// no trailing zero coefficients; the zero polynomial is empty.
using IntPoly = std::vector<ExactInt>;

void trim(IntPoly& p);
long degree(const IntPoly& p);
IntPoly derivative(const IntPoly& p);
ExactInt content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

// lc(b)^(deg a - deg b + 1) a mod b, computed over the integers.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
// Primitive gcd with positive leading coefficient.
IntPoly gcd(IntPoly a, IntPoly b);
// a / b, requiring exact divisibility over the integers.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

IntPoly square_free_part(const IntPoly& p);

// Distinct real roots of p, by a Sturm sequence of its square-free part.
long count_real_roots(const IntPoly& p);

// All complex roots real (counting multiplicity). Constants count as
// hyperbolic; the zero polynomial is rejected.
bool is_hyperbolic(const IntPoly& p);

}  // namespace p24::poly
