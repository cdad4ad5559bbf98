#pragma once

#include <string>
#include <vector>

#include "symcyc/divisors.hpp"
#include "symcyc/int.hpp"
#include "symcyc/intpoly.hpp"

namespace symcyc {

/// Basis element of Pic(X): the hyperplane class plus blowup fibers, or a
/// symmetry-consolidated sum of them.
struct BasisElement {
    enum class Tag {
        H,
        E,      // point fiber over e_i (index)
        Fcyc,   // cyclic-case fiber over the Fourier column f_i (index)
        A,      // point fiber over a_i (index)
        V,      // point fiber over v_i (index)
        AV,     // point fiber over A v_i (index)
        P,      // subspace fiber, support multiples of r (index = r)
        Pe,     // even-support subspace fiber for divisor r (index = r)
        Po,     // odd-support subspace fiber for divisor r (index = r)
        Pev,    // the parity subspace fiber P_e (no divisor index)
        Pov,    // the parity subspace fiber P_o
        APe,    // fiber over the A-image of the even parity subspace
        APo,
        Gamma,  // fiber over a vanishing-coordinate subspace (index = rho)
        Ahalf,  // point fiber over a_{p/2} (4 | q only)
        SymE,     // sum of E_i over i in S_1 (odd) or E_0 + E_p (even)
        SymA,     // index 0: A_0 [+ A_p]; index r >= 1: sum of A_j over the r-class
        SymAV,    // sum of AV_i, i in S_1
        SymV,     // sum of V_i, i in S_1
        SymPw,    // P_e + P_o
        SymAPw,   // AP_e + AP_o
        SymPwr,   // P_{e,r} + P_{o,r} (index = r)
    };
    Tag tag;
    int index = 0;

    bool operator==(const BasisElement& o) const { return tag == o.tag && index == o.index; }
    std::string label() const;
};

enum class BasisKind { Full, Symmetrized };

enum class MapKind { Cyclic, SymmetricCyclic };

/// Labeled square integer matrix of the pullback action on Pic(X).
/// Column b holds the coordinates of the pullback of basis element b.
struct PicMatrix {
    int q = 0;
    DivisorCase kind = DivisorCase::CyclicOnly;
    BasisKind basis = BasisKind::Full;
    MapKind map = MapKind::SymmetricCyclic;
    std::vector<BasisElement> labels;
    IntMat m;

    int size() const { return static_cast<int>(labels.size()); }
    int index_of(const BasisElement& b) const;
    Int deg_f() const { return m(0, 0); }  // (H,H) entry
};

/// Pullback matrix for the reciprocal-then-Fourier map on all cyclic
/// matrices; basis {H, E_0, F_0, ..., E_{q-1}, F_{q-1}}. q >= 3.
PicMatrix build_cyclic(int q);

/// Pullback matrix for odd q >= 3 (both the prime and composite structure).
PicMatrix build_odd(int q, BasisKind basis);

/// Pullback matrix for q = 2 mod 4, q >= 6.
PicMatrix build_twice_odd(int q, BasisKind basis);

/// Pullback matrix for q = 0 mod 4, q >= 8.
PicMatrix build_div4(int q, BasisKind basis);

/// Case dispatch over q >= 3 for the symmetric-cyclic map. Throws
/// UnsupportedQ for q = 4, where only the cyclic builder applies.
PicMatrix build_pullback(int q, BasisKind basis);

/// Consolidate a full-basis matrix onto its symmetry classes (the builders
/// call this internally; exposed for tests).
PicMatrix symmetrize(const PicMatrix& full);

/// Closed-form polynomial whose largest root is the spectral radius, for
/// odd composite q.
IntPoly closed_form_odd(int q);

/// The T-polynomials entering the closed forms, keyed by divisor, plus T_0.
struct ClosedFormParts {
    std::vector<std::pair<int, IntPoly>> T;   // per tracked divisor, ascending
    IntPoly T0;
    IntPoly full;                             // the expanded polynomial
};
ClosedFormParts closed_form_odd_parts(int q);

/// Closed form for q = 2 mod 4 (divisor lattice of the odd half).
IntPoly closed_form_twice_odd(int q);
ClosedFormParts closed_form_twice_odd_parts(int q);

/// Block determinant of the 2n x 2n test matrix with diagonal blocks
/// [[-x, a_j], [1, -x]] and constant upper blocks: equals prod (x^2 - a_j).
IntPoly block_determinant_Mn(const std::vector<Int>& a);

/// Determinant of the bordered variant via its recursion.
IntPoly block_determinant_Mprime(const std::vector<Int>& a);

/// Literal determinant by cofactor expansion over polynomial entries;
/// used as the independent check of the block formulas.
IntPoly cofactor_determinant(const std::vector<std::vector<IntPoly>>& m);

/// The two literal block matrices, for feeding the cofactor oracle.
std::vector<std::vector<IntPoly>> literal_Mn(const std::vector<Int>& a);
std::vector<std::vector<IntPoly>> literal_Mprime(const std::vector<Int>& a);

/// Serialization: labels plus decimal entries.
std::string matrix_to_json(const PicMatrix& pm);
std::string matrix_to_csv(const PicMatrix& pm);

}  // namespace symcyc
