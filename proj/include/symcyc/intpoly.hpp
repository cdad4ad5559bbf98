#pragma once

#include <string>
#include <vector>

#include "symcyc/int.hpp"
#include "symcyc/polynomial.hpp"

namespace symcyc {

using IntPoly = Polynomial<Int>;

Int poly_content(const IntPoly& p);

/// p divided by its content, leading coefficient made positive.
IntPoly primitive_part(const IntPoly& p);

/// Greatest common divisor as polynomials over the rationals, returned as
/// the primitive integer polynomial with positive leading coefficient.
/// Computed modulo word-size primes with Chinese remaindering and verified
/// by exact trial division.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p'): same roots, all simple.
IntPoly squarefree_part(const IntPoly& p);

/// Evaluate at a rational point.
Rat eval_rat(const IntPoly& p, const Rat& x);

std::vector<std::string> coeff_strings(const IntPoly& p);
IntPoly poly_from_strings(const std::vector<std::string>& coeffs);

}  // namespace symcyc
