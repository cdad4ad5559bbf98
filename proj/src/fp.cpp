#include "symcyc/fp.hpp"

#include "symcyc/errors.hpp"

namespace symcyc::fp {

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // Deterministic Miller-Rabin witness set for 64-bit integers.
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        if (a % n == 0) continue;
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 smallest_prime_above(u64 lo, u64 q) {
    u64 p = lo - (lo % q) + 1;
    while (p <= lo || !is_prime(p)) p += q;
    return p;
}

std::vector<int> prime_factors(u64 n) {
    std::vector<int> fs;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(static_cast<int>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(static_cast<int>(n));
    return fs;
}

u64 order_dividing(u64 g, u64 bound, u64 mu) {
    u64 order = bound;
    for (int p : prime_factors(bound)) {
        while (order % p == 0 && powmod(g, order / static_cast<u64>(p), mu) == 1)
            order /= static_cast<u64>(p);
    }
    return order;
}

u64 element_of_order(u64 mu, u64 n, u64 seed) {
    if ((mu - 1) % n != 0) throw BadPrime("modulus is not 1 mod requested order");
    u64 h = 2 + seed % (mu - 3);
    for (int attempts = 0; attempts < 256; ++attempts, h = h % (mu - 2) + 2) {
        u64 g = powmod(h, (mu - 1) / n, mu);
        if (g == 1) continue;
        bool ok = true;
        for (int p : prime_factors(n)) {
            if (powmod(g, n / static_cast<u64>(p), mu) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw BadGenerator("no element of requested order found");
}

u64 oracle_prime(int q, int rank, int want_two_exp, int* achieved_two_exp) {
    u64 odd = static_cast<u64>(q);
    while ((odd & 1) == 0) odd >>= 1;
    for (int a = want_two_exp; a >= 12; --a) {
        u64 step = odd << a;
        if (step >= (1ull << 31)) continue;
        int found = 0;
        for (u64 mu = step + 1; mu < (1ull << 31); mu += step) {
            if ((mu - 1) % static_cast<u64>(q) != 0) continue;  // even q needs 2-part from step
            if (is_prime(mu)) {
                if (found == rank) {
                    if (achieved_two_exp) *achieved_two_exp = a;
                    return mu;
                }
                ++found;
            }
        }
    }
    throw BadPrime("no oracle prime found");
}

}  // namespace symcyc::fp
