#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcyc/cyclotomic.hpp"
#include "symcyc/fp_poly.hpp"
#include "symcyc/picard.hpp"

namespace symcyc {

/// Measured iterate degrees of the map restricted to a generic line over a
/// prime field, after common-factor removal at every step.
struct DegreeSequence {
    int q = 0;
    MapKind map = MapKind::SymmetricCyclic;
    fp::u64 mu = 0;
    fp::u64 generator = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    bool capped = false;  // stopped early at the degree cap
    std::vector<long long> degrees;  // degrees[0] = 1

    std::string to_json() const;
};

struct OracleOptions {
    long long degree_cap = 1000000;  // abort past this degree and keep the prefix
    int prime_rank = 0;              // 0 = smallest suitable prime, 1 = next, ...
    int retry_budget = 8;            // redraws on degenerate lines
    bool parallel_trials = true;
};

/// Iterate the map on a random line over F_mu and record reduced degrees.
/// Deterministic for fixed (q, map, n_max, trials, seed, options).
DegreeSequence run_oracle(int q, MapKind map, int n_max, int trials, std::uint64_t seed,
                          const OracleOptions& options = {});

/// Worker state for a single trial (exposed for tests).
struct LineIterationState {
    int q = 0;
    MapKind map = MapKind::SymmetricCyclic;
    fp::u64 mu = 0;
    fp::u64 generator = 0;                     // order-q element defining the reduction
    std::vector<std::vector<fp::u64>> matrix;  // A or F reduced mod mu
    std::vector<fp::FpPoly> coords;
    long long degree_cap = 1000000;
    std::vector<long long> degrees{1};
    bool capped = false;

    enum class StepOutcome { Continue, Stopped, Degenerate };

    /// One map application: reciprocal products with exact content removal,
    /// then the linear step. With degrees_only the reduced coordinates are
    /// not materialized (only the new degree is recorded), which also ends
    /// the run.
    StepOutcome step(bool degrees_only);
};

struct CompareReport {
    bool ok = true;
    int depth = 0;                  // number of iterate degrees compared
    int mismatch_at = -1;
    long long oracle_value = 0;
    std::string matrix_value;
};

/// Check degrees[n] against the (H,H) entry of m^n for every recorded n.
CompareReport compare(const DegreeSequence& seq, const PicMatrix& m);

struct LemmaCheck {
    std::string name;
    bool pass = false;
    std::string witness;  // failure detail, empty on success
};

struct LemmaReport {
    int q = 0;
    std::vector<LemmaCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Exact cyclotomic verification of the orbit structure: the involution
/// identity A^2 = qI, the point orbits for odd q, the support patterns of
/// the divisor orbits, the parity-subspace equations for q = 2 mod 4, and
/// the vanishing-pattern and fiber-coordinate facts for 4 | q.
LemmaReport verify_orbit_lemmas(int q);

}  // namespace symcyc
