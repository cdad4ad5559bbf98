// Acceptance suite: one numbered criterion per invocation, one PASS/FAIL
// line per sub-check, exit 0 iff every sub-check of the criterion passed.
//
// Criteria 2, 4 and 5 contain sub-checks pinned to reference worked values
// that the exact computation contradicts; those sub-checks are implemented
// as stated and fail with a diagnostic showing the verified value. See the
// project README ("Known discrepancies with the reference worked examples").

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "symcyc/charpoly.hpp"
#include "symcyc/oracle.hpp"
#include "symcyc/picard.hpp"
#include "symcyc/spectral.hpp"

using namespace symcyc;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what, const std::string& detail = "") {
    std::printf("  %s  %s%s%s\n", ok ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

void info(const std::string& what) { std::printf("  INFO  %s\n", what.c_str()); }

IntPoly poly(std::initializer_list<long> cs) {
    std::vector<Int> v;
    for (long c : cs) v.emplace_back(c);
    return IntPoly(std::move(v));
}

const IntPoly kD12 = poly({24, -264, -290, 310, 559, 109, -410, -300, 136, 144, -20, -21, 1});
const IntPoly kD6 = poly({-6, -16, 11, 32, -6, -14, 1});
const IntPoly kPrintedD11 =
    poly({512, 256, -1760, -720, 2304, 756, -1494, -256, 441, -5, -29, 1});

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double s() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string fmt(double x) {
    char b[64];
    std::snprintf(b, sizeof(b), "%.6f", x);
    return b;
}

void criterion1() {
    Timer t;
    PicMatrix sym = build_odd(45, BasisKind::Symmetrized);
    IntPoly cp = charpoly(sym.m);
    IntPoly target = poly({1, 1}) * poly({-1, 1}) * poly({-1, 1}) * kD12;
    check(cp == target, "q=45 symmetrized charpoly equals (x+1)(x-1)^2 times the degree-12 factor");
    SpectralResult sr = spectral_radius(sym.m, cp, 1e-9);
    check(std::abs(sr.rho - 21.6052) <= 0.0005, "rho = 21.6052 +/- 0.0005",
          "computed " + fmt(sr.rho));
    check(std::abs(sr.delta - 466.784) <= 0.01, "delta = 466.784 +/- 0.01",
          "computed " + fmt(sr.delta));
    check(t.s() < 5.0, "runtime < 5 s", fmt(t.s()) + " s");
}

void criterion2() {
    ClosedFormParts parts = closed_form_odd_parts(45);
    std::map<int, IntPoly> T(parts.T.begin(), parts.T.end());
    check(T.at(3) == Int(4) * (poly({-3, 0, 1}) * poly({-2, 0, 1}) * poly({-1, 0, 1})),
          "T_3 = 4(x^2-3)(x^2-2)(x^2-1)");
    check(T.at(5) == Int(3) * (poly({-4, 0, 1}) * poly({-2, 0, 1}) * poly({-1, 0, 1})),
          "T_5 = 3(x^2-4)(x^2-2)(x^2-1)");
    check(T.at(9) == Int(2) * (poly({0, 0, 1}) * poly({-3, 0, 1}) * poly({-1, 0, 1})),
          "T_9 = 2x^2(x^2-3)(x^2-1)");
    check(T.at(15) == poly({-12, 0, 0, 0, 1}) * poly({-2, 0, 1}), "T_15 = (x^4-12)(x^2-2)");
    IntPoly printed_T0 = poly({-72, 0, 150, 0, -76, 0, 8, 0, 1});
    check(parts.T0 == printed_T0, "T_0 matches the reference intermediate value",
          "recursion gives " + parts.T0.str() +
              "; the reference intermediate is inconsistent with the reference final expansion, "
              "which the next sub-check reproduces exactly");
    check(parts.full == poly({-1, 1}) * kD12,
          "expanded closed form equals (x-1) times the degree-12 factor");
}

void criterion3() {
    PicMatrix sym = build_twice_odd(30, BasisKind::Symmetrized);
    IntPoly cp = charpoly(sym.m);
    IntPoly target = poly({0, 1}) * poly({1, 1}) * poly({-1, 1}) * poly({-1, 1}) * kD6;
    check(cp == target, "q=30 symmetrized charpoly equals x(x+1)(x-1)^2 times the degree-6 factor");
    SpectralResult sr = spectral_radius(sym.m, cp, 1e-9);
    check(std::abs(sr.rho - 14.26) <= 0.01, "rho = 14.26 +/- 0.01", "computed " + fmt(sr.rho));
    check(std::abs(sr.delta - 203.347) <= 0.01, "delta = 203.347 +/- 0.01",
          "computed " + fmt(sr.delta));
}

void criterion4() {
    // Reference worked rows for q=60, as printed. The exact finite-field
    // degree oracle (criterion 7 machinery, run at q=12, 20, 24, 36 and 60)
    // contradicts three entries of the printed matrix; the verified rows add
    // the middle-fiber self-intersection and the partner pullback of each
    // vanishing-subspace fiber. The sub-checks below implement the criterion
    // as stated against the printed values, and report the verified ones.
    PicMatrix sym = build_div4(60, BasisKind::Symmetrized);
    using Col = std::map<std::string, long>;
    auto col_of = [&](const std::string& lab) {
        Col c;
        int j = -1;
        for (int k = 0; k < sym.size(); ++k)
            if (sym.labels[static_cast<size_t>(k)].label() == lab) j = k;
        for (int i = 0; i < sym.size(); ++i)
            if (sym.m(i, j) != 0)
                c[sym.labels[static_cast<size_t>(i)].label()] =
                    sym.m(i, j).convert_to<long>();
        return c;
    };
    std::map<std::string, Col> printed = {
        {"E", {{"A", 1}}},
        {"A", {{"H", 2}, {"E", -1}, {"Pw(2)", -1}, {"Pw(6)", -1}, {"Pw(10)", -1}}},
        {"Ahalf",
         {{"H", 1}, {"E", -1}, {"Pw(2)", -1}, {"Pw(6)", -1}, {"Pw(10)", -1}, {"G3", -1}, {"G5", -1}}},
        {"A^(2)", {{"H", 8}, {"E", -8}, {"Pw(2)", -4}, {"Pw(6)", -8}, {"Pw(10)", -8}}},
        {"A^(6)", {{"H", 4}, {"E", -4}, {"Pw(2)", -2}, {"Pw(6)", -2}, {"Pw(10)", -4}}},
        {"A^(10)", {{"H", 2}, {"E", -2}, {"Pw(2)", -1}, {"Pw(6)", -2}, {"Pw(10)", -1}}},
        {"Pw(2)", {{"A^(2)", 1}}},
        {"Pw(6)", {{"A^(6)", 1}}},
        {"Pw(10)", {{"A^(10)", 1}}},
        {"G5",
         {{"H", 4}, {"E", -4}, {"Ahalf", -4}, {"Pw(2)", -4}, {"Pw(6)", -4}, {"Pw(10)", -4}, {"G3", -4}}},
        {"G3",
         {{"H", 2}, {"E", -2}, {"Ahalf", -2}, {"Pw(2)", -2}, {"Pw(6)", -2}, {"Pw(10)", -2}, {"G5", -2}}},
        {"H",
         {{"H", 30}, {"E", -29}, {"Ahalf", -14}, {"Pw(2)", -22}, {"Pw(6)", -27}, {"Pw(10)", -28},
          {"G5", -2}, {"G3", -4}}},
    };
    int diffs = 0;
    std::string diff_detail;
    for (const auto& [lab, want] : printed) {
        Col got = col_of(lab);
        if (got != want) {
            ++diffs;
            diff_detail += (diff_detail.empty() ? "" : "; ") + lab;
        }
    }
    check(diffs == 0, "symmetrized matrix rows match the reference worked rows exactly",
          diffs == 0 ? ""
                     : "columns differing: " + diff_detail +
                           " (degree-oracle-verified rows add the Ahalf self-term and the "
                           "partner pullback term in each G column)");
    IntPoly cp = charpoly(sym.m);
    check(cp.divisible_by(kPrintedD11),
          "dominant-factor coefficients match the reference degree-11 polynomial",
          "verified charpoly factors as x(x-1)^2 times a degree-9 polynomial");
    SpectralResult sr = spectral_radius(sym.m, cp, 1e-9);
    check(std::abs(sr.rho - 28.6503) <= 0.0005, "rho = 28.6503 +/- 0.0005",
          "computed " + fmt(sr.rho) + " (oracle-validated matrix)");
    check(std::abs(sr.delta - 820.841) <= 0.01, "delta = 820.841 +/- 0.01",
          "computed " + fmt(sr.delta));
    info("verified values: rho = " + fmt(sr.rho) + ", delta = " + fmt(sr.delta));
}

void criterion5() {
    for (int q = 3; q <= 12; ++q) {
        PicMatrix pm = build_cyclic(q);
        IntPoly cp = charpoly(pm.m);
        IntPoly printed = poly({1, 2 - q, 1});
        IntPoly x2m1 = poly({-1, 0, 1});
        for (int i = 0; i < q - 1; ++i) printed *= x2m1;
        bool as_stated = cp == printed;
        bool with_unit = cp == poly({-1, 1}) * printed;
        check(as_stated,
              "q=" + std::to_string(q) + ": charpoly equals (x^2-1)^{q-1}(x^2+(2-q)x+1)",
              as_stated ? ""
                        : std::string("matrix is (2q+1)-dimensional; verified identity: charpoly "
                                      "= (x-1) * reference polynomial") +
                              (with_unit ? " (holds exactly)" : " (DOES NOT HOLD)"));
    }
}

void criterion6() {
    for (int q : {3, 5, 7, 11, 13}) {
        int p = (q - 1) / 2;
        IntPoly dom = poly({1, -p, 1});
        PicMatrix full = build_odd(q, BasisKind::Full);
        PicMatrix sym = build_odd(q, BasisKind::Symmetrized);
        IntPoly cpf = charpoly(full.m), cps = charpoly(sym.m);
        bool divides = cpf.divisible_by(dom) && cps.divisible_by(dom);
        RootModulus rm = largest_root_modulus(dom, 1e-10);
        SpectralResult sr = spectral_radius(sym.m, cps, 1e-10);
        bool dominant = std::abs(rm.modulus - sr.rho) <= 1e-9;
        check(divides && dominant,
              "q=" + std::to_string(q) + ": dominant factor is x^2-" + std::to_string(p) + "x+1");
    }
}

void criterion7() {
    Timer t;
    struct Probe {
        int q;
        MapKind map;
        int n;
    };
    std::vector<Probe> probes = {
        {5, MapKind::SymmetricCyclic, 8},  {7, MapKind::SymmetricCyclic, 8},
        {9, MapKind::SymmetricCyclic, 8},  {11, MapKind::SymmetricCyclic, 8},
        {13, MapKind::SymmetricCyclic, 8}, {15, MapKind::SymmetricCyclic, 8},
        {3, MapKind::Cyclic, 8},           {4, MapKind::Cyclic, 8},
        {5, MapKind::Cyclic, 8},           {6, MapKind::Cyclic, 8},
        {12, MapKind::SymmetricCyclic, 4}, {20, MapKind::SymmetricCyclic, 4},
        {30, MapKind::SymmetricCyclic, 4}, {45, MapKind::SymmetricCyclic, 4},
    };
    for (const Probe& pr : probes) {
        OracleOptions opts;  // default degree cap 10^6
        DegreeSequence a = run_oracle(pr.q, pr.map, pr.n, 2, 1, opts);
        opts.prime_rank = 1;
        DegreeSequence b = run_oracle(pr.q, pr.map, pr.n, 2, 1, opts);
        PicMatrix m = pr.map == MapKind::Cyclic ? build_cyclic(pr.q)
                                                : build_pullback(pr.q, BasisKind::Full);
        CompareReport ca = compare(a, m), cb = compare(b, m);
        bool primes_agree = a.degrees == b.degrees && a.mu != b.mu;
        int depth = static_cast<int>(a.degrees.size()) - 1;
        bool depth_ok = depth == pr.n || a.capped;
        std::string label = (pr.map == MapKind::Cyclic ? "cyclic q=" : "symmetric q=") +
                            std::to_string(pr.q) + ": oracle equals matrix powers to depth " +
                            std::to_string(depth) + "/" + std::to_string(pr.n) +
                            (a.capped ? " (degree cap reached)" : "");
        check(ca.ok && cb.ok && primes_agree && depth_ok, label,
              !ca.ok ? "mismatch at n=" + std::to_string(ca.mismatch_at)
                     : (!primes_agree ? "prime disagreement" : ""));
    }
    check(t.s() < 120.0, "runtime < 120 s", fmt(t.s()) + " s");
}

void criterion8() {
    Timer t;
    for (int q = 3; q <= 60; ++q) {
        LemmaReport rep = verify_orbit_lemmas(q);
        std::string bad;
        for (const auto& c : rep.checks)
            if (!c.pass) bad += c.name + "; ";
        check(rep.all_pass(), "q=" + std::to_string(q) + ": " +
                                  std::to_string(rep.checks.size()) + " exact orbit checks",
              bad);
    }
    check(t.s() < 60.0, "runtime < 60 s", fmt(t.s()) + " s");
}

void criterion9() {
    for (int q = 3; q <= 60; ++q) {
        if (q == 4) {
            PicMatrix cyc = build_cyclic(q);
            check(cyc.deg_f() == q - 1, "q=4: cyclic (H,H) entry equals q-1");
            continue;
        }
        DivisorProfile pr = build_profile(q);
        PicMatrix full = build_pullback(q, BasisKind::Full);
        PicMatrix sym = build_pullback(q, BasisKind::Symmetrized);
        IntPoly cpf = charpoly(full.m), cps = charpoly(sym.m);
        bool divides = cpf.divisible_by(cps);
        SpectralResult rf = spectral_radius(full.m, cpf, 1e-10);
        SpectralResult rs = spectral_radius(sym.m, cps, 1e-10);
        bool radii = std::abs(rf.rho - rs.rho) <= 1e-9;
        int p = q % 2 ? (q - 1) / 2 : q / 2;
        bool anchor = full.deg_f() == p && sym.deg_f() == p &&
                      build_cyclic(q).deg_f() == q - 1;
        // unit-circle cofactors against the closed forms (where they exist)
        bool unit = true;
        std::string unit_note = "n/a";
        if (pr.kind == DivisorCase::Odd) {
            IntPoly cf = closed_form_odd(q);
            unit = cps.divisible_by(cf) && unit_circle_cofactor_check(cps, cf);
            unit_note = "closed form";
        } else if (pr.kind == DivisorCase::TwiceOdd) {
            IntPoly cf = closed_form_twice_odd(q);
            unit = cps.divisible_by(cf) && unit_circle_cofactor_check(cps, cf);
            unit_note = "closed form";
        } else if (pr.kind == DivisorCase::OddPrime) {
            IntPoly dom = poly({1, -(q - 1) / 2, 1});
            unit = cps.divisible_by(dom) && unit_circle_cofactor_check(cps, dom);
            unit_note = "prime quadratic";
        } else {
            unit = unit_circle_cofactor_check(cps, dominant_factor(cps) );
            unit_note = "dominant factor";
        }
        bool ok = divides && radii && anchor && unit;
        check(ok,
              "q=" + std::to_string(q) +
                  ": sym divides full, radii agree to 1e-9, degree anchors, unit cofactor (" +
                  unit_note + ")",
              ok ? ""
                 : (!divides ? "divisibility" : (!radii ? "radii" : (!anchor ? "anchor" : "cofactor"))));
    }
}

void criterion10() {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> entry(-9, 9);
    int done = 0;
    bool all_ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        std::vector<Int> a;
        for (int i = 0; i < n; ++i) a.emplace_back(entry(rng));
        bool ok = block_determinant_Mn(a) == cofactor_determinant(literal_Mn(a));
        if (n >= 2)
            ok = ok && block_determinant_Mprime(a) == cofactor_determinant(literal_Mprime(a));
        all_ok = all_ok && ok;
        ++done;
    }
    check(all_ok && done == 50,
          "block determinants match literal cofactor expansion on 50 random tuples (n <= 4)");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..10>\n");
        return 2;
    }
    int c = std::atoi(argv[1]);
    std::printf("CRITERION %d\n", c);
    switch (c) {
        case 1: criterion1(); break;
        case 2: criterion2(); break;
        case 3: criterion3(); break;
        case 4: criterion4(); break;
        case 5: criterion5(); break;
        case 6: criterion6(); break;
        case 7: criterion7(); break;
        case 8: criterion8(); break;
        case 9: criterion9(); break;
        case 10: criterion10(); break;
        default:
            std::fprintf(stderr, "unknown criterion\n");
            return 2;
    }
    std::printf("CRITERION %d: %s\n", c, g_failures == 0 ? "PASS" : "FAIL");
    return g_failures == 0 ? 0 : 1;
}
