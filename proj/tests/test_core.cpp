#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symcyc/charpoly.hpp"
#include "symcyc/fp.hpp"
#include "symcyc/fp_poly.hpp"
#include "symcyc/intpoly.hpp"
#include "symcyc/polynomial.hpp"
#include "symcyc/picard.hpp"
#include "symcyc/spectral.hpp"

using namespace symcyc;
using fp::FpPoly;
using fp::u64;

namespace {

std::mt19937_64 rng(12345);

FpPoly random_poly(int deg, u64 mu, bool monic = false) {
    if (deg < 0) return {};
    FpPoly p(static_cast<size_t>(deg) + 1);
    for (auto& c : p) c = rng() % mu;
    if (monic)
        p.back() = 1 + rng() % (mu - 1);
    else if (p.back() == 0)
        p.back() = 1;
    return p;
}

FpPoly naive_mul(const FpPoly& a, const FpPoly& b, u64 mu) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j] % mu) % mu;
    fp::trim(r);
    return r;
}

FpPoly naive_gcd(FpPoly a, FpPoly b, u64 mu) {
    fp::trim(a);
    fp::trim(b);
    while (!b.empty()) {
        FpPoly r = a;
        // naive remainder
        u64 inv = fp::invmod(b.back(), mu);
        while (r.size() >= b.size() && !r.empty()) {
            u64 c = fp::mulmod(r.back(), inv, mu);
            size_t off = r.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                u64 t = fp::mulmod(c, b[i], mu);
                u64& x = r[off + i];
                x = x >= t ? x - t : x + mu - t;
            }
            fp::trim(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    return fp::make_monic(std::move(a), mu);
}

}  // namespace

TEST_CASE("fp primes and generators") {
    CHECK(fp::is_prime(2013265921ull));
    CHECK(fp::is_prime(754974721ull));
    CHECK_FALSE(fp::is_prime(754974723ull));
    u64 p = fp::smallest_prime_above(1 << 20, 45);
    CHECK(p > (1u << 20));
    CHECK((p - 1) % 45 == 0);
    CHECK(fp::is_prime(p));

    int achieved = 0;
    u64 mu = fp::oracle_prime(45, 0, 23, &achieved);
    CHECK(fp::is_prime(mu));
    CHECK((mu - 1) % 45 == 0);
    CHECK(achieved >= 20);
    u64 mu2 = fp::oracle_prime(45, 1, 23, &achieved);
    CHECK(mu2 != mu);

    u64 g = fp::element_of_order(mu, 45, 1);
    CHECK(fp::powmod(g, 45, mu) == 1);
    CHECK(fp::powmod(g, 9, mu) != 1);
    CHECK(fp::powmod(g, 15, mu) != 1);
}

TEST_CASE("fp poly multiplication: transform vs schoolbook") {
    const u64 mu = 754974721;  // 45 * 2^24 + 1
    for (int da = 0; da < 40; ++da) {
        FpPoly a = random_poly(da, mu), b = random_poly(rng() % 50, mu);
        CHECK(fp::mul(a, b, mu) == naive_mul(a, b, mu));
    }
    for (int trial = 0; trial < 6; ++trial) {
        FpPoly a = random_poly(500 + static_cast<int>(rng() % 800), mu);
        FpPoly b = random_poly(300 + static_cast<int>(rng() % 900), mu);
        CHECK(fp::mul(a, b, mu) == naive_mul(a, b, mu));
    }
}

TEST_CASE("fp poly division invariants") {
    const u64 mu = 754974721;
    for (int trial = 0; trial < 60; ++trial) {
        int db = 1 + static_cast<int>(rng() % 300);
        int da = db + static_cast<int>(rng() % 700);
        FpPoly a = random_poly(da, mu), b = random_poly(db, mu, true);
        FpPoly q, r;
        fp::divmod(a, b, mu, &q, &r);
        CHECK(fp::deg(r) < fp::deg(b));
        CHECK(fp::add(fp::mul(q, b, mu), r, mu) == a);
    }
}

TEST_CASE("fp poly gcd: half-gcd vs Euclid") {
    const u64 mu = 754974721;
    for (int trial = 0; trial < 40; ++trial) {
        int dg = static_cast<int>(rng() % 60);
        FpPoly g = random_poly(dg, mu, true);
        FpPoly a = fp::mul(g, random_poly(static_cast<int>(rng() % 400), mu), mu);
        FpPoly b = fp::mul(g, random_poly(static_cast<int>(rng() % 400), mu), mu);
        FpPoly fast = fp::gcd(a, b, mu);
        FpPoly slow = naive_gcd(a, b, mu);
        CHECK(fast == slow);
    }
    // large structured case to cross the half-gcd threshold
    FpPoly g = random_poly(700, mu, true);
    FpPoly a = fp::mul(g, random_poly(2000, mu), mu);
    FpPoly b = fp::mul(g, random_poly(1900, mu), mu);
    CHECK(fp::gcd(a, b, mu) == naive_gcd(a, b, mu));
    // coprime case
    CHECK(fp::deg(fp::gcd(random_poly(1200, mu), random_poly(1100, mu), mu)) == 0);
}

TEST_CASE("polynomial ring basics") {
    IntPoly a{Int(-1), Int(0), Int(1)};                 // x^2 - 1
    IntPoly b{Int(1), Int(0), Int(1)};                  // x^2 + 1
    CHECK((a * b) == IntPoly{Int(-1), Int(0), Int(0), Int(0), Int(1)});
    CHECK((a * b).div_exact(b) == a);
    CHECK_THROWS_AS(a.div_exact(IntPoly{Int(0), Int(1)}), InexactDivision);
    CHECK(a.eval(Int(3)) == 8);
    CHECK(IntPoly{}.degree() == -1);
    CHECK((a - a).is_zero());
    CHECK(a.derivative() == IntPoly{Int(0), Int(2)});

    // gcd over the rationals
    IntPoly x3m1{Int(-1), Int(0), Int(0), Int(1)};
    CHECK(poly_gcd(a, x3m1) == IntPoly{Int(-1), Int(1)});
    CHECK(poly_gcd(a, b).degree() == 0);
    IntPoly big = a * a * b * IntPoly{Int(7)};
    CHECK(squarefree_part(big) == a * b);
}

TEST_CASE("charpoly: direct examples and cofactor-expansion oracle") {
    {
        IntMat m(1, 1);
        m(0, 0) = 5;
        CHECK(charpoly(m) == IntPoly{Int(-5), Int(1)});
    }
    {
        // 2x2 block with the standard two-blowup shape, N=3, M=1
        IntMat m(2, 2);
        m(0, 0) = 3;
        m(0, 1) = 2;
        m(1, 0) = -1;
        m(1, 1) = -1;
        CHECK(charpoly(m) == IntPoly{Int(-1), Int(-2), Int(1)});
    }
    {
        IntMat id = IntMat::identity(4);
        IntPoly expect{Int(1)};
        for (int i = 0; i < 4; ++i) expect *= IntPoly{Int(-1), Int(1)};
        CHECK(charpoly(id) == expect);
    }
    // random matrices vs det(xI - m) by cofactor expansion over polynomials
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            IntMat m(n, n);
            std::vector<std::vector<IntPoly>> xm(static_cast<size_t>(n),
                                                 std::vector<IntPoly>(static_cast<size_t>(n)));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    int e = entry(rng);
                    m(i, j) = e;
                    xm[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        i == j ? IntPoly{Int(-e), Int(1)} : IntPoly{Int(-e)};
                }
            CHECK(charpoly(m) == cofactor_determinant(xm));
        }
    }
}

TEST_CASE("matrix powers: identity and semigroup law") {
    IntMat m(3, 3);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = entry(rng);
    CHECK(matrix_power_entry(m, 0, 1, 1) == 1);
    CHECK(matrix_power_entry(m, 0, 0, 1) == 0);
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b) {
            IntMat lhs = m.pow(static_cast<unsigned long>(a)) * m.pow(static_cast<unsigned long>(b));
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    CHECK(lhs(i, j) == matrix_power_entry(m, a + b, i, j));
        }
    CHECK_THROWS_AS(matrix_power_entry(m, 1, 3, 0), std::out_of_range);
}

TEST_CASE("spectral radius of companion-style matrices") {
    // companion of x^2 - 3x + 1: dominant root (3+sqrt(5))/2
    IntMat m(2, 2);
    m(0, 0) = 0;
    m(0, 1) = -1;
    m(1, 0) = 1;
    m(1, 1) = 3;
    SpectralResult r = spectral_radius(m, 1e-9);
    double expected = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(r.rho == doctest::Approx(expected).epsilon(1e-9));
    CHECK(r.delta == doctest::Approx(expected * expected).epsilon(1e-9));
    CHECK(r.certified_error <= 1e-9);
    REQUIRE(r.method_tags.size() == 2);
    CHECK(r.method_tags[0] == "charpoly-roots");
    CHECK(r.method_tags[1] == "power-iteration");
}

TEST_CASE("spectral radius with multiple unit roots") {
    // charpoly (x-1)^3: rho = 1; power iteration converges to 1
    IntMat m = IntMat::identity(3);
    SpectralResult r = spectral_radius(m, 1e-9);
    CHECK(r.rho == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(charpoly(m) == IntPoly{Int(-1), Int(3), Int(-3), Int(1)});
}

TEST_CASE("unit circle cofactor check") {
    IntPoly dom{Int(1), Int(-3), Int(1)};          // x^2 - 3x + 1
    IntPoly unit{Int(-1), Int(0), Int(1)};         // x^2 - 1
    CHECK(unit_circle_cofactor_check(dom * unit, dom));
    IntPoly bad = IntPoly{Int(-2), Int(1)} * IntPoly{Int(-1), Int(1)};  // (x-2)(x-1)
    CHECK_FALSE(unit_circle_cofactor_check(bad, IntPoly{Int(-1), Int(1)}));
    CHECK_THROWS_AS(unit_circle_cofactor_check(dom, unit), InexactDivision);
}

TEST_CASE("dominant factor stripping") {
    IntPoly dom{Int(1), Int(-3), Int(1)};
    IntPoly p = dom * IntPoly{Int(-1), Int(1)} * IntPoly{Int(-1), Int(1)} * IntPoly{Int(1), Int(1)};
    p = p.shifted(2);  // times x^2
    CHECK(dominant_factor(p) == dom);
}

TEST_CASE("rational evaluation") {
    IntPoly p{Int(1), Int(-3), Int(1)};  // x^2 - 3x + 1
    CHECK(eval_rat(p, Rat(1, 2)) == Rat(-1, 4));
    CHECK(eval_rat(p, Rat(3)) == Rat(1));
}
