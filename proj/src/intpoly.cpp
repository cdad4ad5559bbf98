#include "symcyc/intpoly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "symcyc/errors.hpp"
#include "symcyc/fp.hpp"
#include "symcyc/fp_poly.hpp"

namespace symcyc {

namespace {

using fp::FpPoly;
using fp::u64;

Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

FpPoly reduce_mod(const IntPoly& p, u64 mu) {
    FpPoly r(p.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) {
        Int c = p.coeffs()[i] % Int(mu);
        if (c < 0) c += Int(mu);
        r[i] = c.convert_to<u64>();
    }
    fp::trim(r);
    return r;
}

}  // namespace

Int poly_content(const IntPoly& p) {
    Int g = 0;
    for (const Int& c : p.coeffs()) g = int_gcd(g, c);
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return {};
    Int g = poly_content(p);
    if (p.leading() < 0) g = -g;
    std::vector<Int> cs(p.coeffs());
    for (Int& c : cs) c /= g;
    return IntPoly(std::move(cs));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly{} : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    IntPoly pa = primitive_part(a), pb = primitive_part(b);
    Int lc_bound = int_gcd(pa.leading(), pb.leading());

    u64 prime = (1ull << 30);
    int best_deg = std::min(pa.degree(), pb.degree()) + 1;
    std::vector<Int> acc;       // CRT accumulation of lc_bound * monic gcd
    Int modulus = 1;
    IntPoly stable_candidate;   // candidate awaiting confirmation by one more prime
    for (int iter = 0; iter < 512; ++iter) {
        prime = fp::smallest_prime_above(prime, 1);
        if (pa.leading() % Int(prime) == 0 || pb.leading() % Int(prime) == 0) continue;
        FpPoly g = fp::gcd(reduce_mod(pa, prime), reduce_mod(pb, prime), prime);
        int d = fp::deg(g);
        if (d == 0) return IntPoly{Int(1)};
        if (d > best_deg) continue;  // unlucky prime
        if (d < best_deg) {          // previous primes were unlucky
            best_deg = d;
            acc.clear();
            modulus = 1;
            stable_candidate = IntPoly{};
        }
        // scale to leading coefficient lc_bound and fold into the CRT image
        Int lb = lc_bound % Int(prime);
        if (lb < 0) lb += prime;
        FpPoly scaled = fp::scale(g, lb.convert_to<u64>(), prime);
        if (acc.empty()) {
            acc.assign(static_cast<size_t>(d) + 1, 0);
            for (size_t i = 0; i < scaled.size(); ++i) acc[i] = Int(scaled[i]);
            for (auto& c : acc)
                if (c > Int(prime) / 2) c -= prime;
            modulus = prime;
        } else {
            scaled.resize(static_cast<size_t>(d) + 1, 0);
            Int new_mod = modulus * prime;
            Int minv = 0;
            {  // modulus^{-1} mod prime
                Int m = modulus % Int(prime);
                if (m < 0) m += prime;
                minv = Int(fp::invmod(m.convert_to<u64>(), prime));
            }
            for (size_t i = 0; i < acc.size(); ++i) {
                Int r = acc[i] % Int(prime);
                if (r < 0) r += prime;
                Int diff = (Int(scaled[i]) - r) % Int(prime);
                if (diff < 0) diff += prime;
                Int t = (diff * minv) % Int(prime);
                acc[i] += t * modulus;
                Int half = new_mod / 2;
                if (acc[i] > half) acc[i] -= new_mod;
                if (acc[i] < -half) acc[i] += new_mod;
            }
            modulus = new_mod;
        }
        IntPoly candidate = primitive_part(IntPoly(std::vector<Int>(acc)));
        if (!stable_candidate.is_zero() && candidate == stable_candidate) {
            if (pa.divisible_by(candidate) && pb.divisible_by(candidate)) return candidate;
        }
        stable_candidate = candidate;
    }
    throw NonConvergence("modular polynomial gcd did not stabilize");
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() <= 1) return primitive_part(p);
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return primitive_part(p);
    return primitive_part(primitive_part(p).div_exact(g));
}

Rat eval_rat(const IntPoly& p, const Rat& x) {
    Rat r = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) r = r * x + Rat(*it);
    return r;
}

std::vector<std::string> coeff_strings(const IntPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) out.push_back(c.str());
    return out;
}

IntPoly poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Int> cs;
    cs.reserve(coeffs.size());
    for (const auto& s : coeffs) cs.emplace_back(s);
    return IntPoly(std::move(cs));
}

}  // namespace symcyc
