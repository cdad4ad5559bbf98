#include "symcyc/spectral.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <sstream>

#include "symcyc/charpoly.hpp"
#include "symcyc/errors.hpp"

namespace symcyc {

namespace {

using BF = boost::multiprecision::cpp_bin_float_50;
using CF = boost::multiprecision::cpp_complex_50;

std::vector<BF> to_float_coeffs(const IntPoly& p) {
    std::vector<BF> c;
    c.reserve(p.coeffs().size());
    for (const Int& x : p.coeffs()) c.emplace_back(x);
    return c;
}

CF eval_cf(const std::vector<BF>& c, const CF& z) {
    CF r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + CF(*it);
    return r;
}

BF eval_abs(const std::vector<BF>& c, const BF& x) {
    BF r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + abs(*it);
    return r;
}

struct AberthResult {
    std::vector<CF> roots;
    std::vector<BF> errors;  // certified per-root inclusion radii
    bool discs_disjoint = true;
};

// All roots of a squarefree polynomial with certified inclusion radii
// n * |p(z)/p'(z)| (valid because the input has simple roots).
AberthResult aberth(const IntPoly& poly) {
    const int n = poly.degree();
    AberthResult out;
    if (n <= 0) return out;
    std::vector<BF> c = to_float_coeffs(poly);
    std::vector<BF> dc = to_float_coeffs(poly.derivative());

    BF bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, abs(c[static_cast<size_t>(i)] / c.back()));
    bound += 1;

    const BF pi = 4 * atan(BF(1));
    std::vector<CF> z(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        BF angle = 2 * pi * k / n + BF("0.4");
        BF radius = bound * (BF("0.5") + BF("0.5") * (k + 1) / n);
        z[static_cast<size_t>(k)] = CF(radius * cos(angle), radius * sin(angle));
    }

    const BF eps_stop = pow(BF(10), -40);
    for (int iter = 0; iter < 2000; ++iter) {
        BF worst = 0;
        for (int k = 0; k < n; ++k) {
            CF zk = z[static_cast<size_t>(k)];
            CF pv = eval_cf(c, zk);
            CF dv = eval_cf(dc, zk);
            if (pv == CF(0)) continue;
            CF newton = dv == CF(0) ? CF(0) : pv / dv;
            CF s = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                CF diff = zk - z[static_cast<size_t>(j)];
                if (diff == CF(0)) diff = CF(eps_stop, eps_stop);
                s += CF(1) / diff;
            }
            CF denom = CF(1) - newton * s;
            CF corr = denom == CF(0) ? newton : newton / denom;
            z[static_cast<size_t>(k)] -= corr;
            worst = std::max(worst, abs(corr) / (1 + abs(zk)));
        }
        if (worst < eps_stop) break;
    }

    out.roots = z;
    out.errors.resize(static_cast<size_t>(n));
    // conservative residual bound: account for coefficient rounding
    const BF round_eps = pow(BF(2), -160);
    for (int k = 0; k < n; ++k) {
        CF zk = z[static_cast<size_t>(k)];
        BF az = abs(zk);
        BF numer = abs(eval_cf(c, zk)) + eval_abs(c, az) * round_eps;
        BF denom = abs(eval_cf(dc, zk)) - eval_abs(dc, az) * round_eps;
        if (denom <= 0) {
            out.errors[static_cast<size_t>(k)] = bound;  // no certificate
            out.discs_disjoint = false;
            continue;
        }
        out.errors[static_cast<size_t>(k)] = BF(n) * numer / denom;
    }
    for (int a = 0; a < n && out.discs_disjoint; ++a)
        for (int b = a + 1; b < n; ++b) {
            BF d = abs(z[static_cast<size_t>(a)] - z[static_cast<size_t>(b)]);
            if (d <= out.errors[static_cast<size_t>(a)] + out.errors[static_cast<size_t>(b)]) {
                out.discs_disjoint = false;
                break;
            }
        }
    return out;
}

// Strip x^k (zero roots) so the remaining constant term is nonzero.
IntPoly strip_zero_roots(const IntPoly& p, int* stripped = nullptr) {
    std::vector<Int> c = p.coeffs();
    size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;
    if (stripped) *stripped = static_cast<int>(k);
    return IntPoly(std::vector<Int>(c.begin() + static_cast<long>(k), c.end()));
}

}  // namespace

std::vector<RootModulus> root_moduli(const IntPoly& p, double /*tol*/) {
    if (p.is_zero()) throw std::invalid_argument("root moduli of the zero polynomial");
    int zeros = 0;
    IntPoly base = strip_zero_roots(p, &zeros);
    std::vector<RootModulus> out;
    if (zeros > 0) out.push_back({0.0, 0.0});
    if (base.degree() <= 0) return out;
    IntPoly sf = squarefree_part(base);
    AberthResult ar = aberth(sf);
    if (!ar.discs_disjoint)
        throw NonConvergence("root certification failed: inclusion discs overlap");
    for (size_t i = 0; i < ar.roots.size(); ++i) {
        out.push_back({abs(ar.roots[i]).convert_to<double>(), ar.errors[i].convert_to<double>()});
    }
    return out;
}

RootModulus largest_root_modulus(const IntPoly& p, double tol) {
    auto mods = root_moduli(p, tol);
    RootModulus best{0.0, 0.0};
    double hi = 0.0;
    for (const auto& m : mods) {
        if (m.modulus > best.modulus) best = m;
        hi = std::max(hi, m.modulus + m.error);
    }
    // every true root lies in some disc, so the spectral radius is at most hi
    best.error = std::max(best.error, hi - best.modulus);
    if (best.error > tol)
        throw NonConvergence("root modulus certification exceeds requested tolerance");
    return best;
}

namespace {

struct PowerIterationOutcome {
    bool converged = false;
    double estimate = 0.0;
};

PowerIterationOutcome power_iteration(const IntMat& m, double tol) {
    const size_t n = static_cast<size_t>(m.rows());
    IntVec v(n, Int(1));
    PowerIterationOutcome out;
    for (int iter = 0; iter < 64; ++iter) {
        IntVec w = m.apply(v);
        double lo = 0, hi = 0;
        bool any = false;
        for (size_t i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            double r = w[i].convert_to<double>() / v[i].convert_to<double>();
            if (!any) {
                lo = hi = r;
                any = true;
            } else {
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
        }
        if (any && hi > 0 && hi - lo < tol * std::max(1.0, hi)) {
            out.converged = true;
            out.estimate = 0.5 * (lo + hi);
            return out;
        }
        v = std::move(w);
        // rescale occasionally to keep entries from growing without bound
        if (iter % 16 == 15) {
            Int g = 0;
            for (size_t i = 0; i < n; ++i) g = boost::multiprecision::gcd(g, v[i]);
            if (g > 1)
                for (size_t i = 0; i < n; ++i) v[i] /= g;
        }
    }
    return out;
}

}  // namespace

SpectralResult spectral_radius(const IntMat& m, const IntPoly& cp, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    RootModulus root = largest_root_modulus(cp, tol);
    SpectralResult res;
    res.rho = root.modulus;
    res.delta = res.rho * res.rho;
    res.certified_error = root.error;
    res.method_tags = {"charpoly-roots"};
    PowerIterationOutcome pi = power_iteration(m, tol);
    if (pi.converged) {
        res.method_tags.push_back("power-iteration");
        if (std::abs(pi.estimate - res.rho) > 10 * tol)
            throw NonConvergence("spectral radius methods disagree beyond 10*tol");
    } else {
        res.method_tags.push_back("power-iteration:fallback");
    }
    return res;
}

SpectralResult spectral_radius(const IntMat& m, double tol) {
    return spectral_radius(m, charpoly(m), tol);
}

bool unit_circle_cofactor_check(const IntPoly& p, const IntPoly& q) {
    IntPoly cof = p.div_exact(q);  // throws InexactDivision if q does not divide p
    if (cof.degree() <= 0) return true;
    for (const auto& m : root_moduli(cof)) {
        if (m.modulus - 1.0 > 1e-6 + m.error) return false;
    }
    return true;
}

IntPoly dominant_factor(const IntPoly& p) {
    IntPoly r = strip_zero_roots(p);
    const IntPoly xm1{Int(-1), Int(1)}, xp1{Int(1), Int(1)};
    for (;;) {
        if (r.degree() > 0 && r.divisible_by(xm1)) {
            r = r.div_exact(xm1);
            continue;
        }
        if (r.degree() > 0 && r.divisible_by(xp1)) {
            r = r.div_exact(xp1);
            continue;
        }
        break;
    }
    return squarefree_part(r);
}

}  // namespace symcyc
