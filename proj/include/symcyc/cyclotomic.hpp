#pragma once

#include <memory>
#include <vector>

#include "symcyc/fp.hpp"
#include "symcyc/int.hpp"
#include "symcyc/intpoly.hpp"

namespace symcyc {

/// q-th cyclotomic polynomial, computed by recursive exact division of
/// x^q - 1 by the cyclotomic polynomials of the proper divisors of q.
IntPoly cyclotomic_polynomial(int q);

int euler_totient(int q);

/// Shared reduction data for Z[omega] = Z[x]/Phi_q(x).
struct CycRing {
    int q = 0;
    int deg = 0;  // totient(q)
    IntPoly phi;
    std::vector<std::vector<Int>> xpow;  // x^k mod Phi_q for 0 <= k < table size

    static std::shared_ptr<const CycRing> get(int q);
};

/// Exact element of Z[omega], stored reduced modulo Phi_q.
class CycInt {
  public:
    CycInt() = default;  // zero in a detached state; usable with any ring
    CycInt(int q, Int constant);
    static CycInt omega_power(int q, long k);  // omega^k

    int q() const { return ring_ ? ring_->q : 0; }
    bool is_zero() const;
    const std::vector<Int>& coeffs() const { return c_; }

    CycInt operator-() const;
    friend CycInt operator+(const CycInt& a, const CycInt& b);
    friend CycInt operator-(const CycInt& a, const CycInt& b);
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
    CycInt& operator-=(const CycInt& o) { return *this = *this - o; }
    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }
    friend CycInt operator*(const Int& s, const CycInt& a);
    bool operator==(const CycInt& o) const;
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    std::string str() const;

  private:
    std::shared_ptr<const CycRing> ring_;
    std::vector<Int> c_;  // length ring_->deg when attached
    friend CycInt make_cyc(std::shared_ptr<const CycRing>, std::vector<Int>);
};

/// omega^j + omega^{q-j} as an exact cyclotomic integer.
CycInt omega_j(int q, long j);

/// Dense matrix over Z[omega].
struct CycMatrix {
    int rows = 0, cols = 0, q = 0;
    std::vector<CycInt> e;

    CycInt& at(int r, int c) { return e[static_cast<size_t>(r) * cols + c]; }
    const CycInt& at(int r, int c) const { return e[static_cast<size_t>(r) * cols + c]; }

    static CycMatrix zero(int q, int rows, int cols);
    static CycMatrix identity_times(int q, int n, Int scalar);
    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
    bool operator==(const CycMatrix& o) const;
    std::vector<CycInt> apply(const std::vector<CycInt>& v) const;
};

/// The symmetrized Fourier matrix: (p+1) x (p+1) with p = (q-1)/2 for odd q
/// and p = q/2 for even q. Satisfies A*A = q*I. Requires q >= 3.
CycMatrix build_A(int q);

/// Sign vector with projective meaning; entries in {-1, 0, +1}.
struct SignVector {
    std::vector<int> entries;
};

/// The +-1 vector fixed by the coordinate-reciprocal involution, for odd q
/// and k coprime to q. k = 1 gives the base pattern; general k applies the
/// index permutation induced by omega_{jk}. Throws InvalidIndex when
/// gcd(k, q) != 1.
SignVector v_vector(int q, int k);

/// For a proper divisor r of odd q: the v-vector of q/r with r-1 zeros
/// interleaved between consecutive entries (support on multiples of r).
SignVector eta_vector(int q, int r);

/// Ring homomorphism Z[omega] -> F_mu sending omega to g. Requires
/// mu == 1 (mod q) and g of exact multiplicative order q mod mu.
fp::u64 reduce_mod_prime(const CycInt& x, fp::u64 mu, fp::u64 g);

/// Entry-wise reduction of A (or any cyclotomic matrix).
std::vector<std::vector<fp::u64>> reduce_matrix_mod_prime(const CycMatrix& m, fp::u64 mu,
                                                          fp::u64 g);

/// Projective equality over Z[omega] via cross products u_i v_j == u_j v_i.
bool projectively_equal(const std::vector<CycInt>& u, const std::vector<CycInt>& v);

/// Coordinate-reciprocal map applied to an exact vector with no zero
/// entries: returns the vector of complementary products.
std::vector<CycInt> reciprocal_products(const std::vector<CycInt>& x);

/// Same, for a vector with exactly one zero entry: the zero slot receives 0
/// and slot i receives the product over all other nonzero slots except i.
std::vector<CycInt> reciprocal_products_one_zero(const std::vector<CycInt>& x);

}  // namespace symcyc
