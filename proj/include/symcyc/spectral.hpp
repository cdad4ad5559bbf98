#pragma once

#include <string>
#include <vector>

#include "symcyc/int.hpp"
#include "symcyc/intpoly.hpp"

namespace symcyc {

struct SpectralResult {
    double rho = 0.0;
    double delta = 0.0;
    double certified_error = 0.0;
    std::vector<std::string> method_tags;
};

struct RootModulus {
    double modulus;
    double error;  // certified radius around the approximation
};

/// Moduli of all roots of p (multiplicity collapsed), each with a certified
/// error bound. Works on the squarefree part internally.
std::vector<RootModulus> root_moduli(const IntPoly& p, double tol = 1e-12);

/// Largest root modulus of p, certified to within the returned error.
RootModulus largest_root_modulus(const IntPoly& p, double tol = 1e-9);

/// Spectral radius of an integer matrix, certified to within tol by an
/// all-roots solve of the characteristic polynomial, cross-checked against
/// exact integer power iteration when the dominant eigenvalue admits it.
/// Throws NonConvergence if the two methods disagree beyond 10*tol.
SpectralResult spectral_radius(const IntMat& m, double tol = 1e-9);

/// Same, reusing an already computed characteristic polynomial.
SpectralResult spectral_radius(const IntMat& m, const IntPoly& charpoly_of_m, double tol = 1e-9);

/// True iff q divides p and every root of p/q has modulus at most 1 + 1e-6.
/// Throws InexactDivision when q does not divide p.
bool unit_circle_cofactor_check(const IntPoly& p, const IntPoly& q);

/// Remove x^k, (x-1)^a and (x+1)^b factors, then take the squarefree part.
/// The result carries the dominant root whenever rho > 1.
IntPoly dominant_factor(const IntPoly& p);

}  // namespace symcyc
