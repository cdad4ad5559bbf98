#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symcyc/charpoly.hpp"
#include "symcyc/errors.hpp"
#include "symcyc/oracle.hpp"
#include "symcyc/spectral.hpp"

using namespace symcyc;

TEST_CASE("oracle matches matrix powers for a small prime q") {
    DegreeSequence seq = run_oracle(7, MapKind::SymmetricCyclic, 8, 2, 1);
    CHECK(seq.degrees ==
          std::vector<long long>{1, 3, 9, 25, 69, 183, 481, 1263, 3309});
    PicMatrix full = build_odd(7, BasisKind::Full);
    CompareReport rep = compare(seq, full);
    CHECK(rep.ok);
    CHECK(rep.depth == 8);
    // growth ratio approaches the spectral radius
    SpectralResult sr = spectral_radius(full.m, 1e-9);
    double ratio = static_cast<double>(seq.degrees[8]) / static_cast<double>(seq.degrees[7]);
    CHECK(std::abs(ratio - sr.rho) < 0.05 * sr.rho);
}

TEST_CASE("oracle is deterministic and prime-independent") {
    DegreeSequence a = run_oracle(9, MapKind::SymmetricCyclic, 6, 2, 42);
    DegreeSequence b = run_oracle(9, MapKind::SymmetricCyclic, 6, 2, 42);
    CHECK(a.to_json() == b.to_json());
    OracleOptions other;
    other.prime_rank = 1;
    DegreeSequence c = run_oracle(9, MapKind::SymmetricCyclic, 6, 2, 42, other);
    CHECK(c.mu != a.mu);
    CHECK(c.degrees == a.degrees);
    DegreeSequence d = run_oracle(9, MapKind::SymmetricCyclic, 6, 2, 43);
    CHECK(d.degrees == a.degrees);  // different lines measure the same degrees
}

TEST_CASE("oracle vs matrices across the case split") {
    struct Probe {
        int q;
        int n;
    };
    for (Probe pr : {Probe{5, 8}, Probe{9, 6}, Probe{11, 5}, Probe{15, 4}}) {
        DegreeSequence seq = run_oracle(pr.q, MapKind::SymmetricCyclic, pr.n, 2, 7);
        CompareReport rep = compare(seq, build_odd(pr.q, BasisKind::Full));
        INFO("q = ", pr.q);
        CHECK(rep.ok);
        CHECK(rep.depth == pr.n);
    }
    for (Probe pr : {Probe{6, 6}, Probe{18, 4}, Probe{30, 3}}) {
        DegreeSequence seq = run_oracle(pr.q, MapKind::SymmetricCyclic, pr.n, 2, 7);
        CompareReport rep = compare(seq, build_twice_odd(pr.q, BasisKind::Full));
        INFO("q = ", pr.q);
        CHECK(rep.ok);
    }
    for (Probe pr : {Probe{12, 5}, Probe{16, 5}, Probe{20, 4}, Probe{24, 3}, Probe{32, 3},
                     Probe{36, 3}}) {
        DegreeSequence seq = run_oracle(pr.q, MapKind::SymmetricCyclic, pr.n, 2, 7);
        CompareReport rep = compare(seq, build_div4(pr.q, BasisKind::Full));
        INFO("q = ", pr.q);
        CHECK(rep.ok);
    }
    for (Probe pr : {Probe{3, 6}, Probe{4, 6}, Probe{5, 5}, Probe{6, 5}}) {
        DegreeSequence seq = run_oracle(pr.q, MapKind::Cyclic, pr.n, 2, 7);
        CompareReport rep = compare(seq, build_cyclic(pr.q));
        INFO("cyclic q = ", pr.q);
        CHECK(rep.ok);
    }
}

TEST_CASE("compare flags a wrong matrix") {
    DegreeSequence seq = run_oracle(12, MapKind::SymmetricCyclic, 4, 2, 11);
    PicMatrix wrong = build_div4(12, BasisKind::Full);
    // remove the self-intersection of the middle fiber column: this is the
    // defect the degree sequence is sensitive to at n = 3
    int ah = wrong.index_of({BasisElement::Tag::Ahalf, 0});
    wrong.m(ah, ah) = 0;
    CompareReport rep = compare(seq, wrong);
    CHECK_FALSE(rep.ok);
    CHECK(rep.mismatch_at == 3);
    CHECK(rep.oracle_value == 176);
    CHECK(rep.matrix_value == "174");
}

TEST_CASE("integrable case grows subexponentially") {
    DegreeSequence seq = run_oracle(5, MapKind::SymmetricCyclic, 10, 2, 3);
    REQUIRE(seq.degrees.size() == 11);
    for (size_t n = 0; n + 2 < seq.degrees.size(); ++n) {
        long long dd = seq.degrees[n + 2] - 2 * seq.degrees[n + 1] + seq.degrees[n];
        CHECK(std::abs(dd) <= 3);
    }
}

TEST_CASE("degree cap truncates runs") {
    OracleOptions opts;
    opts.degree_cap = 100;
    DegreeSequence seq = run_oracle(7, MapKind::SymmetricCyclic, 8, 2, 1, opts);
    CHECK(seq.capped);
    CHECK(seq.degrees.size() < 9);
    // the recorded prefix is still exact
    CompareReport rep = compare(seq, build_odd(7, BasisKind::Full));
    CHECK(rep.ok);
}

TEST_CASE("degenerate coordinates are detected") {
    LineIterationState st;
    st.q = 5;
    st.mu = 167772161;
    st.matrix = {{1, 1, 1}, {1, 2, 3}, {1, 4, 2}};
    st.coords = {{1, 1}, {}, {2, 1}};  // one coordinate identically zero
    CHECK(st.step(false) == LineIterationState::StepOutcome::Degenerate);
}

TEST_CASE("oracle argument validation") {
    CHECK_THROWS_AS(run_oracle(2, MapKind::Cyclic, 4, 2, 1), UnsupportedQ);
    CHECK_THROWS(run_oracle(7, MapKind::Cyclic, 0, 2, 1));
    CHECK_THROWS(run_oracle(7, MapKind::Cyclic, 4, 1, 1));
}

TEST_CASE("orbit lemma report passes for representative q") {
    for (int q : {3, 4, 5, 7, 9, 12, 15, 16, 18, 20, 24, 30, 36, 45, 48, 60}) {
        LemmaReport rep = verify_orbit_lemmas(q);
        INFO("q = ", q);
        for (const auto& c : rep.checks) {
            INFO(c.name, ": ", c.witness);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("oracle validates nested and cross-paired vanishing-subspace divisors") {
    // q=48 nests its vanishing-subspace divisors (2|4, 2|6, 3|6): hyperplane
    // classes there subtract every contained fiber, not just the gcd class
    for (int q : {40, 48, 54, 56}) {
        DegreeSequence seq = run_oracle(q, MapKind::SymmetricCyclic, 3, 2, 5);
        CompareReport rep = compare(seq, build_pullback(q, BasisKind::Full));
        INFO("q = ", q);
        CHECK(rep.ok);
    }
}
