#pragma once

#include "symcyc/int.hpp"
#include "symcyc/intpoly.hpp"

namespace symcyc {

/// Characteristic polynomial det(xI - m) of a square integer matrix,
/// computed by the division-free Berkowitz algorithm. Monic of degree n.
IntPoly charpoly(const IntMat& m);

/// Entry (row, col) of m^n, exact; m^0 is the identity.
Int matrix_power_entry(const IntMat& m, long n, int row, int col);

}  // namespace symcyc
