#pragma once

#include <map>
#include <string>
#include <vector>

namespace symcyc {

enum class DivisorCase { CyclicOnly, OddPrime, Odd, TwiceOdd, DivisibleBy4 };

std::string to_string(DivisorCase c);

/// All divisor combinatorics of q used by the pullback-matrix builders.
struct DivisorProfile {
    int q = 0;
    int p = 0;  // (q-1)/2 for odd q, q/2 for even q
    DivisorCase kind = DivisorCase::CyclicOnly;

    /// Tracked divisor keys. Odd case: proper divisors 1 < r < q of q.
    /// TwiceOdd: divisors 1 < r < p of the odd half p. DivisibleBy4: the
    /// r-family (largest power of two times an odd divisor, below p).
    std::vector<int> divisors;

    std::map<int, std::vector<int>> S;  // S_r = { 1<=j<=p : gcd(j,q)=r }, all r | q with S_r nonempty
    std::map<int, int> kappa;           // #S_r per tracked divisor
    std::map<int, int> mu;              // degree-drop multipliers per tracked divisor
    int kappa_1 = 0;                    // #S_1

    std::vector<int> rho_list;  // DivisibleBy4 second family: 1 < rho < q/4, rho | q/4
    std::vector<int> r_list;    // synonym of `divisors` in the DivisibleBy4 case

    int rho_check(int rho) const { return q / (4 * rho); }
};

/// Classify q and fill every member. Throws UnsupportedQ for q < 3.
DivisorProfile build_profile(int q);

/// Divisor-closure set: { s in tracked divisors : s | r }, including r.
/// Throws UnknownDivisor when r is not tracked.
std::vector<int> I_set(const DivisorProfile& profile, int r);

}  // namespace symcyc
