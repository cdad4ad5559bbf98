#pragma once

#include <cstdint>
#include <vector>

#include "symcyc/fp.hpp"

namespace symcyc::fp {

/// Dense polynomial over F_mu, ascending coefficients in [0, mu), trimmed.
using FpPoly = std::vector<u64>;

int deg(const FpPoly& a);
void trim(FpPoly& a);
bool is_zero(const FpPoly& a);

FpPoly add(const FpPoly& a, const FpPoly& b, u64 mu);
FpPoly sub(const FpPoly& a, const FpPoly& b, u64 mu);
FpPoly scale(const FpPoly& a, u64 s, u64 mu);
u64 eval(const FpPoly& a, u64 x, u64 mu);
FpPoly make_monic(FpPoly a, u64 mu);

/// Product. Uses number-theoretic transforms when mu supports the size,
/// Karatsuba otherwise.
FpPoly mul(const FpPoly& a, const FpPoly& b, u64 mu);

/// Quotient and remainder (schoolbook for small sizes, Newton inversion
/// with block reduction for large ones).
void divmod(const FpPoly& a, const FpPoly& b, u64 mu, FpPoly* quo, FpPoly* rem);
FpPoly rem(const FpPoly& a, const FpPoly& b, u64 mu);
FpPoly quot(const FpPoly& a, const FpPoly& b, u64 mu);

/// Monic gcd, half-gcd accelerated.
FpPoly gcd(FpPoly a, FpPoly b, u64 mu);

/// lcm(a, b) = a * (b / gcd(a, b)), monic.
FpPoly lcm(const FpPoly& a, const FpPoly& b, u64 mu);

/// Largest power-of-two transform size supported by mu.
int ntt_capacity(u64 mu);

}  // namespace symcyc::fp
