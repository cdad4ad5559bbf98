#pragma once

#include <cstdint>
#include <vector>

namespace symcyc::fp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Barrett reducer for a fixed odd modulus below 2^31.
struct Reducer {
    u64 mu = 0;
    u64 magic = 0;  // floor(2^64 / mu)

    Reducer() = default;
    explicit Reducer(u64 m) : mu(m), magic(~u64(0) / m) {}

    u64 reduce(u64 x) const {
        u64 q = static_cast<u64>((static_cast<u128>(x) * magic) >> 64);
        u64 r = x - q * mu;
        while (r >= mu) r -= mu;
        return r;
    }
    u64 mul(u64 a, u64 b) const { return reduce(a * b); }
    u64 add(u64 a, u64 b) const {
        u64 r = a + b;
        return r >= mu ? r - mu : r;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + mu - b; }
};

inline u64 mulmod(u64 a, u64 b, u64 mu) {
    return static_cast<u64>(static_cast<u128>(a) * b % mu);
}

inline u64 powmod(u64 base, u64 e, u64 mu) {
    u64 r = 1 % mu;
    base %= mu;
    while (e) {
        if (e & 1) r = mulmod(r, base, mu);
        base = mulmod(base, base, mu);
        e >>= 1;
    }
    return r;
}

inline u64 invmod(u64 a, u64 mu) { return powmod(a, mu - 2, mu); }

bool is_prime(u64 n);

/// Smallest prime p > lo with p == 1 (mod q).
u64 smallest_prime_above(u64 lo, u64 q);

/// Deterministic element of multiplicative order exactly n in F_mu
/// (requires n | mu-1). Throws BadGenerator if none is found.
u64 element_of_order(u64 mu, u64 n, u64 seed = 1);

/// Multiplicative order of g modulo mu divides `bound`; returns the exact
/// order assuming it divides bound.
u64 order_dividing(u64 g, u64 bound, u64 mu);

/// Primes suitable for the degree oracle: mu == 1 (mod q) and mu == 1
/// (mod 2^two_exp) so that number-theoretic transforms up to size
/// 2^two_exp exist. rank = 0 gives the smallest such prime, rank = 1 the
/// next one, and so on. Falls back to smaller two_exp if needed; the
/// achieved exponent is written to *achieved_two_exp.
u64 oracle_prime(int q, int rank, int want_two_exp, int* achieved_two_exp);

std::vector<int> prime_factors(u64 n);

}  // namespace symcyc::fp
