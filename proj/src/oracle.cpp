#include "symcyc/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>
#include <thread>

#include "symcyc/charpoly.hpp"
#include "symcyc/errors.hpp"

namespace symcyc {

namespace {

using fp::FpPoly;
using fp::u64;

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4b96dull;
    z = (z ^ (z >> 27)) * 0x94d4a08a85e95dbdull;
    return z ^ (z >> 31);
}

std::vector<std::vector<u64>> fourier_matrix_mod(int q, u64 mu, u64 g) {
    std::vector<std::vector<u64>> F(static_cast<size_t>(q), std::vector<u64>(static_cast<size_t>(q)));
    for (int j = 0; j < q; ++j)
        for (int k = 0; k < q; ++k)
            F[static_cast<size_t>(j)][static_cast<size_t>(k)] =
                fp::powmod(g, static_cast<u64>((static_cast<long>(j) * k) % q), mu);
    return F;
}

int needed_two_exp(int dim, long long cap) {
    // worst-case working degree in one step: (dim+1) * cap, plus slack
    long long worst = 2 * (static_cast<long long>(dim) + 1) * cap;
    int e = 12;
    while ((1ll << e) < worst && e < 23) ++e;
    return e;
}

}  // namespace

LineIterationState::StepOutcome LineIterationState::step(bool degrees_only) {
    const size_t n = coords.size();
    // exact content removal: the reduced reciprocal products are
    // lcm(P_0..P_N) / P_i, and the linear step preserves joint primitivity
    FpPoly L = coords[0];
    if (fp::is_zero(L)) return StepOutcome::Degenerate;
    for (size_t k = 1; k < n; ++k) {
        if (fp::is_zero(coords[k])) return StepOutcome::Degenerate;
        L = fp::lcm(L, coords[k], mu);
    }
    long long dmin = fp::deg(coords[0]);
    for (const auto& p : coords) dmin = std::min<long long>(dmin, fp::deg(p));
    long long new_deg = static_cast<long long>(fp::deg(L)) - dmin;
    // once the next iterate cannot be bounded by the cap, report the degree
    // and stop instead of materializing huge coordinates
    bool next_unbounded =
        static_cast<long long>(n - 1) * std::max(1ll, new_deg) > degree_cap;
    if (degrees_only || next_unbounded) {
        degrees.push_back(new_deg);
        return StepOutcome::Stopped;
    }

    std::vector<FpPoly> reduced(n);
    for (size_t i = 0; i < n; ++i) reduced[i] = fp::quot(L, coords[i], mu);

    // linear step with 128-bit accumulation
    size_t width = 0;
    for (const auto& p : reduced) width = std::max(width, p.size());
    std::vector<FpPoly> next(n);
    std::vector<unsigned __int128> acc(width);
    for (size_t i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (size_t j = 0; j < n; ++j) {
            u64 c = matrix[i][j];
            if (!c) continue;
            const FpPoly& src = reduced[j];
            for (size_t d = 0; d < src.size(); ++d) acc[d] += static_cast<unsigned __int128>(c) * src[d];
        }
        FpPoly out(width);
        for (size_t d = 0; d < width; ++d) out[d] = static_cast<u64>(acc[d] % mu);
        fp::trim(out);
        if (fp::is_zero(out)) return StepOutcome::Degenerate;
        next[i] = std::move(out);
    }
    coords = std::move(next);
    long long d = 0;
    for (const auto& p : coords) d = std::max<long long>(d, fp::deg(p));
    degrees.push_back(d);
    if (d > degree_cap) return StepOutcome::Stopped;
    return StepOutcome::Continue;
}

namespace {

// Runs one line trial to depth n_max; returns the recorded degrees.
struct TrialResult {
    std::vector<long long> degrees;
    bool capped = false;
};

TrialResult run_trial(int q, MapKind map, int n_max, u64 mu, u64 g,
                      const std::vector<std::vector<u64>>& matrix, std::uint64_t trial_seed,
                      long long cap, int retry_budget) {
    const size_t dim = matrix.size();
    for (int attempt = 0; attempt <= retry_budget; ++attempt) {
        std::uint64_t state = trial_seed + 0x1000003ull * static_cast<std::uint64_t>(attempt);
        LineIterationState st;
        st.q = q;
        st.map = map;
        st.mu = mu;
        st.generator = g;
        st.matrix = matrix;
        st.degree_cap = cap;
        st.coords.resize(dim);
        for (size_t i = 0; i < dim; ++i) {
            u64 a = splitmix64(state) % mu;
            u64 b = splitmix64(state) % mu;
            st.coords[i] = FpPoly{a, b};
            fp::trim(st.coords[i]);
        }
        bool degenerate = false;
        for (const auto& c : st.coords)
            if (fp::is_zero(c)) degenerate = true;
        if (degenerate) continue;
        bool ok = true;
        for (int step_n = 1; step_n <= n_max; ++step_n) {
            long long last_deg = st.degrees.back();
            // never start a step whose output cannot be bounded by the cap
            // or by the transform capacity of mu
            long long worst = static_cast<long long>(dim - 1) * std::max(1ll, last_deg);
            if (worst > cap || (dim + 1) * std::max(1ll, last_deg) >= (1ll << fp::ntt_capacity(mu)))
                break;
            auto outcome = st.step(step_n == n_max);
            if (outcome == LineIterationState::StepOutcome::Degenerate) {
                ok = false;
                break;
            }
            if (outcome == LineIterationState::StepOutcome::Stopped) break;
        }
        if (!ok) continue;  // degenerate line: redraw
        st.capped = static_cast<int>(st.degrees.size()) - 1 < n_max;
        return {st.degrees, st.capped};
    }
    throw DegenerateLine("line redraw budget exhausted");
}

}  // namespace

DegreeSequence run_oracle(int q, MapKind map, int n_max, int trials, std::uint64_t seed,
                          const OracleOptions& options) {
    if (q < 3) throw UnsupportedQ("oracle needs q >= 3");
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    if (trials < 2) throw std::invalid_argument("at least two trials required");

    int dim = map == MapKind::Cyclic ? q : (q % 2 ? (q - 1) / 2 + 1 : q / 2 + 1);
    int want = needed_two_exp(dim, options.degree_cap);
    int achieved = 0;
    u64 mu = fp::oracle_prime(q, options.prime_rank, want, &achieved);
    u64 g = fp::element_of_order(mu, static_cast<u64>(q), 1);

    std::vector<std::vector<u64>> matrix;
    if (map == MapKind::Cyclic) {
        matrix = fourier_matrix_mod(q, mu, g);
    } else {
        matrix = reduce_matrix_mod_prime(build_A(q), mu, g);
    }

    std::vector<TrialResult> results(static_cast<size_t>(trials));
    auto worker = [&](int t) {
        std::uint64_t trial_seed = seed * 0x9e3779b97f4a7c15ull + 0x7f4a7c15ull * (t + 1) + mu;
        return run_trial(q, map, n_max, mu, g, matrix, trial_seed, options.degree_cap,
                         options.retry_budget);
    };
    if (options.parallel_trials && trials > 1) {
        std::vector<std::future<TrialResult>> futs;
        for (int t = 0; t < trials; ++t)
            futs.push_back(std::async(std::launch::async, worker, t));
        for (int t = 0; t < trials; ++t) results[static_cast<size_t>(t)] = futs[static_cast<size_t>(t)].get();
    } else {
        for (int t = 0; t < trials; ++t) results[static_cast<size_t>(t)] = worker(t);
    }

    DegreeSequence out;
    out.q = q;
    out.map = map;
    out.mu = mu;
    out.generator = g;
    out.seed = seed;
    out.trials = trials;
    size_t len = 0;
    for (const auto& r : results) len = std::max(len, r.degrees.size());
    out.degrees.assign(len, 0);
    for (const auto& r : results) {
        out.capped = out.capped || r.capped;
        for (size_t i = 0; i < r.degrees.size(); ++i)
            out.degrees[i] = std::max(out.degrees[i], r.degrees[i]);
    }
    return out;
}

std::string DegreeSequence::to_json() const {
    std::ostringstream os;
    os << "{\"q\":" << q << ",\"map_kind\":\""
       << (map == MapKind::Cyclic ? "cyclic" : "symmetric-cyclic") << "\",\"prime\":" << mu
       << ",\"generator\":" << generator << ",\"seed\":" << seed << ",\"trials\":" << trials
       << ",\"capped\":" << (capped ? "true" : "false") << ",\"degrees\":[";
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (i) os << ",";
        os << degrees[i];
    }
    os << "]}";
    return os.str();
}

CompareReport compare(const DegreeSequence& seq, const PicMatrix& m) {
    CompareReport rep;
    rep.depth = static_cast<int>(seq.degrees.size()) - 1;
    for (size_t n = 0; n < seq.degrees.size(); ++n) {
        Int expect = matrix_power_entry(m.m, static_cast<long>(n), 0, 0);
        if (Int(seq.degrees[n]) != expect) {
            rep.ok = false;
            rep.mismatch_at = static_cast<int>(n);
            rep.oracle_value = seq.degrees[n];
            rep.matrix_value = expect.str();
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// exact lemma verification
// ---------------------------------------------------------------------------

namespace {

std::vector<CycInt> column_of_A(const CycMatrix& A, int j) {
    std::vector<CycInt> col(static_cast<size_t>(A.rows));
    for (int i = 0; i < A.rows; ++i) col[static_cast<size_t>(i)] = A.at(i, j);
    return col;
}

std::vector<CycInt> sign_to_cyc(int q, const SignVector& s) {
    std::vector<CycInt> v;
    v.reserve(s.entries.size());
    for (int e : s.entries) v.emplace_back(q, e);
    return v;
}

std::vector<CycInt> unit_vector(int q, int dim, int at) {
    std::vector<CycInt> v(static_cast<size_t>(dim), CycInt(q, 0));
    v[static_cast<size_t>(at)] = CycInt(q, 1);
    return v;
}

std::vector<CycInt> apply_f(const CycMatrix& A, const std::vector<CycInt>& x) {
    return A.apply(reciprocal_products(x));
}

std::vector<int> zero_pattern(const std::vector<CycInt>& v) {
    std::vector<int> z;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i].is_zero()) z.push_back(static_cast<int>(i));
    return z;
}

std::string pattern_str(const std::vector<int>& z) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < z.size(); ++i) {
        if (i) os << ",";
        os << z[i];
    }
    os << "}";
    return os.str();
}

bool multiset_equal(std::vector<CycInt> a, std::vector<CycInt> b) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool found = false;
        for (size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && x == b[j]) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

LemmaReport verify_orbit_lemmas(int q) {
    if (q < 3) throw UnsupportedQ("lemma verification needs q >= 3");
    LemmaReport rep;
    rep.q = q;
    CycMatrix A = build_A(q);
    const int p = A.rows - 1;
    auto check = [&](const std::string& name, bool pass, const std::string& witness = "") {
        rep.checks.push_back({name, pass, pass ? "" : witness});
    };

    // involution identity
    {
        CycMatrix sq = A * A;
        bool ok = sq == CycMatrix::identity_times(q, p + 1, Int(q));
        check("A^2 = qI", ok, "matrix square differs from q*I");
    }

    if (q % 2 == 1) {
        DivisorProfile pr = build_profile(q);
        // point orbits for indices coprime to q
        for (int k : pr.S.at(1)) {
            auto a_k = column_of_A(A, k);
            auto v_k = sign_to_cyc(q, v_vector(q, k));
            auto f_ak = apply_f(A, a_k);
            bool ok1 = projectively_equal(f_ak, v_k);
            auto f_vk = apply_f(A, v_k);
            auto Av_k = A.apply(v_k);
            bool ok2 = projectively_equal(f_vk, Av_k);
            auto f_Avk = apply_f(A, Av_k);
            bool ok3 = projectively_equal(f_Avk, unit_vector(q, p + 1, k));
            std::ostringstream name;
            name << "orbit a_" << k << " -> v_" << k << " -> Av_" << k << " -> e_" << k;
            check(name.str(), ok1 && ok2 && ok3,
                  !ok1 ? "f(a_k) is not v_k" : (!ok2 ? "f(v_k) is not A v_k" : "f(A v_k) is not e_k"));
        }
        // divisor orbits: J a_r matches A eta_r, and the image supports
        for (int r : pr.divisors) {
            auto a_r = column_of_A(A, r);
            auto lhs = reciprocal_products(a_r);
            auto rhs = A.apply(sign_to_cyc(q, eta_vector(q, r)));
            check("J a_r = A eta_r (r=" + std::to_string(r) + ")", projectively_equal(lhs, rhs),
                  "cross products differ");
            for (int j : pr.S.at(r)) {
                auto img = apply_f(A, column_of_A(A, j));
                std::vector<int> expected;
                for (int t = 0; t <= p; ++t)
                    if (t % r != 0) expected.push_back(t);
                bool ok = zero_pattern(img) == expected;
                check("support of f(a_" + std::to_string(j) + ") on multiples of " +
                          std::to_string(r),
                      ok, "pattern " + pattern_str(zero_pattern(img)));
            }
        }
    } else if (q % 4 == 2) {
        DivisorProfile pr = build_profile(q);
        auto expect_support = [&](const std::vector<CycInt>& v, int modulus, int residue) {
            for (int t = 0; t <= p; ++t) {
                bool in_support = t % modulus == residue;
                if (in_support != !v[static_cast<size_t>(t)].is_zero()) return false;
            }
            return true;
        };
        for (int i : pr.S.at(1)) {
            auto img = apply_f(A, column_of_A(A, i));
            check("f(a_" + std::to_string(i) + ") lands in the odd-support subspace",
                  expect_support(img, 2, 1), "pattern " + pattern_str(zero_pattern(img)));
        }
        for (int i : pr.S.at(2)) {
            auto img = apply_f(A, column_of_A(A, i));
            check("f(a_" + std::to_string(i) + ") lands in the even-support subspace",
                  expect_support(img, 2, 0), "pattern " + pattern_str(zero_pattern(img)));
        }
        for (int r : pr.divisors) {
            for (int i : pr.S.at(r)) {
                auto img = apply_f(A, column_of_A(A, i));
                check("f(a_" + std::to_string(i) + ") supported on odd multiples of " +
                          std::to_string(r),
                      expect_support(img, 2 * r, r), "pattern " + pattern_str(zero_pattern(img)));
            }
            for (int i : pr.S.at(2 * r)) {
                auto img = apply_f(A, column_of_A(A, i));
                check("f(a_" + std::to_string(i) + ") supported on even multiples of " +
                          std::to_string(r),
                      expect_support(img, 2 * r, 0), "pattern " + pattern_str(zero_pattern(img)));
            }
        }
        // parity-subspace equations: odd columns satisfy x_k = -x_{p-k},
        // even columns x_k = x_{p-k}
        {
            bool ok = true;
            for (int j = 1; j <= p && ok; j += 2)
                for (int k = 0; k <= p && ok; ++k)
                    if (A.at(k, j) != -A.at(p - k, j)) ok = false;
            check("A-image of the odd-support subspace satisfies x_k = -x_{p-k}", ok,
                  "column equation failed");
            ok = true;
            for (int j = 2; j <= p - 1 && ok; j += 2)
                for (int k = 0; k <= p && ok; ++k)
                    if (A.at(k, j) != A.at(p - k, j)) ok = false;
            // column 0 is all ones and satisfies the even equations as well
            for (int k = 0; k <= p && ok; ++k)
                if (A.at(k, 0) != A.at(p - k, 0)) ok = false;
            check("A-image of the even-support subspace satisfies x_k = x_{p-k}", ok,
                  "column equation failed");
        }
        {
            // reciprocal map preserves the anti-symmetric subspace, and f
            // returns it to the odd-support subspace: spot check on an
            // exact integer point
            std::vector<CycInt> u(static_cast<size_t>(p) + 1);
            for (int k = 0; 2 * k < p; ++k) {
                u[static_cast<size_t>(k)] = CycInt(q, k + 1);
                u[static_cast<size_t>(p - k)] = CycInt(q, -(k + 1));
            }
            auto ju = reciprocal_products(u);
            bool ok = true;
            for (int k = 0; k <= p && ok; ++k)
                if (ju[static_cast<size_t>(k)] != -ju[static_cast<size_t>(p - k)]) ok = false;
            auto fu = A.apply(ju);
            for (int t = 0; t <= p && ok; t += 2)
                if (!fu[static_cast<size_t>(t)].is_zero()) ok = false;
            check("reciprocal map fixes the anti-symmetric subspace and f sends it to odd support",
                  ok, "anti-symmetric sample point failed");
        }
    } else {
        DivisorProfile pr = build_profile(q);
        // every coordinate-coprime column has exactly one vanishing entry
        for (int i = 1; i <= p; ++i) {
            if (std::gcd(i, q) != 1) continue;
            auto zp = zero_pattern(column_of_A(A, i));
            check("a_" + std::to_string(i) + " has exactly one zero coordinate", zp.size() == 1,
                  "pattern " + pattern_str(zp));
        }
        // vanishing patterns of the rho-family columns
        for (int rho : pr.rho_list) {
            int rc = q / (4 * rho);
            bool mirror = true;
            std::vector<int> s_rho = pr.S.at(rho);
            for (int j : s_rho)
                if (std::find(s_rho.begin(), s_rho.end(), p - j) == s_rho.end()) mirror = false;
            check("S_" + std::to_string(rho) + " is symmetric under j -> p-j", mirror, "");
            for (int i : s_rho) {
                auto zp = zero_pattern(column_of_A(A, i));
                std::vector<int> expected;
                for (int t = rc; t <= p; t += 2 * rc) expected.push_back(t);
                check("a_" + std::to_string(i) + " vanishes exactly on odd multiples of " +
                          std::to_string(rc),
                      zp == expected, "pattern " + pattern_str(zp));
            }
        }
        // fiber coordinates of the image of a_1 over a_{p/2}
        if (p >= 2) {
            auto fiber_expected = [&]() {
                std::vector<CycInt> xi(static_cast<size_t>(p) + 1, CycInt(q, 0));
                for (int m2 = 0; 2 * m2 + 1 <= p - 1; ++m2) {
                    long val = p - 1 - 2 * m2;
                    xi[static_cast<size_t>(2 * m2 + 1)] = CycInt(q, m2 % 2 == 0 ? val : -val);
                }
                return xi;
            }();
            auto a1 = column_of_A(A, 1);
            auto fiber = A.apply(reciprocal_products_one_zero(a1));
            check("fiber of f(a_1) follows the alternating pattern p-1, 3-p, p-5, ...",
                  projectively_equal(fiber, fiber_expected), "fiber differs");
            // general coprime index: permuted values, same support parity
            for (int i = 3; i <= p; ++i) {
                if (std::gcd(i, q) != 1) continue;
                auto fib = A.apply(reciprocal_products_one_zero(column_of_A(A, i)));
                // compare multisets after cross-scaling: (p-1) * fib == fib[i] * xi
                std::vector<CycInt> lhs, rhs;
                for (const auto& xv : fib) lhs.push_back(Int(p - 1) * xv);
                const CycInt& anchor = fib[static_cast<size_t>(i)];
                for (const auto& xv : fiber_expected) rhs.push_back(anchor * xv);
                check("fiber of f(a_" + std::to_string(i) + ") permutes the base pattern",
                      multiset_equal(lhs, rhs), "multiset mismatch");
                break;  // one representative beyond i = 1 suffices
            }
        }
    }
    return rep;
}

}  // namespace symcyc
