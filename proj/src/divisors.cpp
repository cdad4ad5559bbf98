#include "symcyc/divisors.hpp"

#include <algorithm>
#include <numeric>

#include "symcyc/errors.hpp"

namespace symcyc {

namespace {

bool is_prime_int(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> divisors_of(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

}  // namespace

std::string to_string(DivisorCase c) {
    switch (c) {
        case DivisorCase::CyclicOnly: return "cyclic-only";
        case DivisorCase::OddPrime: return "odd-prime";
        case DivisorCase::Odd: return "odd";
        case DivisorCase::TwiceOdd: return "twice-odd";
        case DivisorCase::DivisibleBy4: return "divisible-by-4";
    }
    return "?";
}

DivisorProfile build_profile(int q) {
    if (q < 3) throw UnsupportedQ("divisor profile needs q >= 3");
    DivisorProfile pr;
    pr.q = q;
    pr.p = q % 2 ? (q - 1) / 2 : q / 2;

    for (int j = 1; j <= pr.p; ++j) pr.S[std::gcd(j, q)].push_back(j);
    pr.kappa_1 = pr.S.count(1) ? static_cast<int>(pr.S[1].size()) : 0;

    if (q % 2 == 1) {
        pr.kind = is_prime_int(q) ? DivisorCase::OddPrime : DivisorCase::Odd;
        for (int r : divisors_of(q))
            if (r > 1 && r < q) pr.divisors.push_back(r);
        for (int r : pr.divisors) {
            pr.kappa[r] = static_cast<int>(pr.S[r].size());
            pr.mu[r] = (q - 1) / (2 * r) + 1;
        }
    } else if (q % 4 == 2) {
        pr.kind = DivisorCase::TwiceOdd;
        for (int r : divisors_of(pr.p))
            if (r > 1 && r < pr.p) pr.divisors.push_back(r);
        for (int r : pr.divisors) {
            pr.kappa[r] = static_cast<int>(pr.S[r].size());
            pr.mu[r] = (pr.p / r + 1) / 2;
        }
    } else if (q == 4) {
        pr.kind = DivisorCase::CyclicOnly;  // symmetric builders need q >= 8
    } else {
        pr.kind = DivisorCase::DivisibleBy4;
        int two_part = 1;
        int q_odd = q;
        while (q_odd % 2 == 0) {
            q_odd /= 2;
            two_part *= 2;
        }
        const int half_two = two_part / 2;
        for (int rp : divisors_of(q_odd)) {
            int r = half_two * rp;
            if (r < pr.p) pr.r_list.push_back(r);
        }
        std::sort(pr.r_list.begin(), pr.r_list.end());
        pr.divisors = pr.r_list;
        for (int r : pr.divisors) {
            pr.kappa[r] = static_cast<int>(pr.S[r].size());
            pr.mu[r] = (pr.p / r + 1) / 2;
        }
        for (int rho : divisors_of(q / 4))
            if (rho > 1 && rho < q / 4) pr.rho_list.push_back(rho);
        std::sort(pr.rho_list.begin(), pr.rho_list.end());
    }
    return pr;
}

std::vector<int> I_set(const DivisorProfile& profile, int r) {
    if (std::find(profile.divisors.begin(), profile.divisors.end(), r) == profile.divisors.end())
        throw UnknownDivisor("divisor is not tracked in this profile");
    std::vector<int> out;
    if (profile.kind == DivisorCase::DivisibleBy4) {
        // divisibility of the odd parts within the r-family
        auto odd_part = [](int n) {
            while (n % 2 == 0) n /= 2;
            return n;
        };
        for (int s : profile.divisors)
            if (odd_part(r) % odd_part(s) == 0) out.push_back(s);
    } else {
        for (int s : profile.divisors)
            if (r % s == 0) out.push_back(s);
    }
    return out;
}

}  // namespace symcyc
