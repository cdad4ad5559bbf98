// Command-line front end: dynamical degrees of the reciprocal-inverse map
// on symmetric cyclic (and cyclic) matrices via exact pullback matrices,
// with closed-form and finite-field degree cross-checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include "symcyc/charpoly.hpp"
#include "symcyc/errors.hpp"
#include "symcyc/oracle.hpp"
#include "symcyc/picard.hpp"
#include "symcyc/spectral.hpp"

using json = nlohmann::ordered_json;
using namespace symcyc;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitCrossCheck = 3;
constexpr int kExitDegenerate = 4;

std::string sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        f << text << "\n";
    }
}

json poly_json(const IntPoly& p) {
    json a = json::array();
    for (const auto& s : coeff_strings(p)) a.push_back(s);
    return a;
}

struct DeltaComputation {
    json report;
    PicMatrix sym;
    IntPoly cp;
    SpectralResult sr;
};

DeltaComputation compute_delta(int q, BasisKind basis, double tol, bool with_timings) {
    DeltaComputation out;
    json timings;
    Timer t_build;
    out.sym = build_pullback(q, basis);
    timings["build_ms"] = t_build.ms();
    Timer t_cp;
    out.cp = charpoly(out.sym.m);
    timings["charpoly_ms"] = t_cp.ms();
    Timer t_sr;
    out.sr = spectral_radius(out.sym.m, out.cp, tol);
    timings["spectral_ms"] = t_sr.ms();

    json rep;
    rep["q"] = q;
    rep["case"] = to_string(out.sym.kind);
    rep["basis_kind"] = basis == BasisKind::Full ? "full" : "symmetrized";
    rep["basis_size"] = out.sym.size();
    rep["charpoly"] = poly_json(out.cp);
    IntPoly dom = dominant_factor(out.cp);
    if (!dom.is_zero() && dom.degree() > 0) rep["dominant_factor"] = poly_json(dom);
    rep["rho"] = sig12(out.sr.rho);
    rep["delta"] = sig12(out.sr.delta);
    rep["certified_error"] = sig12(out.sr.certified_error);
    rep["method_tags"] = out.sr.method_tags;
    rep["closed_form_used"] = false;
    rep["oracle_checked"] = false;
    if (with_timings) rep["timings"] = timings;
    out.report = std::move(rep);
    return out;
}

int worker_count() {
    if (const char* env = std::getenv("SYMCYC_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

double cyclic_delta(int q) {
    if (q <= 3) return 1.0;
    IntPoly quad{Int(1), Int(2 - q), Int(1)};
    RootModulus r = largest_root_modulus(quad, 1e-12);
    return r.modulus * r.modulus;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynamical degree of the reciprocal-inverse map on symmetric cyclic matrices"};
    app.require_subcommand(1);

    auto* cmd_delta = app.add_subcommand("delta", "compute delta for one q");
    int q = 0;
    std::string basis_str = "symmetrized";
    bool full_flag = false, closed_form = false, no_timings = false;
    int check_oracle_n = 0;
    double tol = 1e-9;
    std::uint64_t seed = 1;
    std::string out_path;
    cmd_delta->add_option("--q", q, "matrix size parameter")->required();
    cmd_delta->add_option("--basis", basis_str, "full|symmetrized");
    cmd_delta->add_flag("--full", full_flag, "use the full basis");
    cmd_delta->add_flag("--closed-form", closed_form, "cross-check against the closed form");
    cmd_delta->add_option("--check-oracle", check_oracle_n,
                          "compare against the degree oracle to depth N");
    cmd_delta->add_option("--tol", tol, "certification tolerance");
    cmd_delta->add_option("--seed", seed, "oracle seed");
    cmd_delta->add_flag("--no-timings", no_timings, "omit timing fields");
    cmd_delta->add_option("--out", out_path, "write JSON to a file");

    auto* cmd_table = app.add_subcommand("table", "compute delta for a range of q");
    int q_from = 3, q_to = 12;
    std::string format = "json";
    cmd_table->add_option("--q-from", q_from, "first q")->required();
    cmd_table->add_option("--q-to", q_to, "last q")->required();
    cmd_table->add_option("--format", format, "json|csv");
    cmd_table->add_option("--tol", tol, "certification tolerance");
    cmd_table->add_flag("--no-timings", no_timings, "omit timing fields");
    cmd_table->add_option("--out", out_path, "write output to a file");

    auto* cmd_matrix = app.add_subcommand("matrix", "export a pullback matrix");
    std::string map_str = "symmetric";
    cmd_matrix->add_option("--q", q, "matrix size parameter")->required();
    cmd_matrix->add_option("--basis", basis_str, "full|symmetrized");
    cmd_matrix->add_option("--map", map_str, "symmetric|cyclic");
    cmd_matrix->add_option("--format", format, "json|csv");
    cmd_matrix->add_option("--out", out_path, "write output to a file");

    auto* cmd_charpoly =
        app.add_subcommand("charpoly", "characteristic polynomial of a pullback matrix");
    cmd_charpoly->add_option("--q", q, "matrix size parameter")->required();
    cmd_charpoly->add_option("--basis", basis_str, "full|symmetrized");
    cmd_charpoly->add_option("--map", map_str, "symmetric|cyclic");
    cmd_charpoly->add_option("--out", out_path, "write JSON to a file");

    auto* cmd_oracle = app.add_subcommand("oracle", "measure iterate degrees over a prime field");
    int depth = 4, trials = 2, prime_rank = 0;
    long long degree_cap = 1000000;
    cmd_oracle->add_option("--q", q, "matrix size parameter")->required();
    cmd_oracle->add_option("--n", depth, "iteration depth")->required();
    cmd_oracle->add_option("--seed", seed, "master seed");
    cmd_oracle->add_option("--trials", trials, "independent generic lines (>= 2)");
    cmd_oracle->add_option("--map", map_str, "symmetric|cyclic");
    cmd_oracle->add_option("--prime-rank", prime_rank, "0 = smallest suitable prime, 1 = next");
    cmd_oracle->add_option("--degree-cap", degree_cap, "abort past this degree");
    cmd_oracle->add_option("--out", out_path, "write JSON to a file");

    auto* cmd_verify = app.add_subcommand("verify", "exact orbit-structure checks");
    cmd_verify->add_option("--q", q, "matrix size parameter")->required();
    cmd_verify->add_option("--out", out_path, "write JSON to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_delta->parsed()) {
            BasisKind basis =
                (full_flag || basis_str == "full") ? BasisKind::Full : BasisKind::Symmetrized;
            if (tol <= 0) throw UnsupportedQ("tolerance must be positive");
            DeltaComputation dc = compute_delta(q, basis, tol, !no_timings);
            if (closed_form) {
                DivisorProfile pr = build_profile(q);
                IntPoly cf;
                if (pr.kind == DivisorCase::Odd)
                    cf = closed_form_odd(q);
                else if (pr.kind == DivisorCase::TwiceOdd)
                    cf = closed_form_twice_odd(q);
                else
                    throw UnsupportedQ("closed form applies to odd composite and 2-mod-4 q");
                RootModulus r = largest_root_modulus(cf, tol);
                dc.report["closed_form_used"] = true;
                dc.report["closed_form"] = poly_json(cf);
                dc.report["closed_form_rho"] = sig12(r.modulus);
                if (std::abs(r.modulus - dc.sr.rho) > 10 * tol) {
                    json diag{{"error", "closed-form cross-check mismatch"},
                              {"rho_matrix", sig12(dc.sr.rho)},
                              {"rho_closed_form", sig12(r.modulus)}};
                    std::cerr << diag.dump() << "\n";
                    return kExitCrossCheck;
                }
                if (!unit_circle_cofactor_check(dc.cp, cf)) {
                    std::cerr << R"({"error":"closed-form cofactor has roots off the unit circle"})"
                              << "\n";
                    return kExitCrossCheck;
                }
            }
            if (check_oracle_n > 0) {
                DegreeSequence seq =
                    run_oracle(q, MapKind::SymmetricCyclic, check_oracle_n, 2, seed);
                PicMatrix fullm = build_pullback(q, BasisKind::Full);
                CompareReport cr = compare(seq, fullm);
                dc.report["oracle_checked"] = true;
                dc.report["oracle_depth"] = static_cast<int>(seq.degrees.size()) - 1;
                if (!cr.ok) {
                    json diag{{"error", "oracle degree mismatch"},
                              {"n", cr.mismatch_at},
                              {"oracle", cr.oracle_value},
                              {"matrix", cr.matrix_value}};
                    std::cerr << diag.dump() << "\n";
                    return kExitCrossCheck;
                }
            }
            emit(dc.report.dump(), out_path);
            return 0;
        }

        if (cmd_table->parsed()) {
            if (q_from < 3 || q_to < q_from) throw UnsupportedQ("need 3 <= q_from <= q_to");
            int count = q_to - q_from + 1;
            std::vector<json> rows(static_cast<size_t>(count));
            int workers = std::min(worker_count(), count);
            std::atomic<int> next{0};
            auto run_rows = [&]() {
                for (;;) {
                    int idx = next.fetch_add(1);
                    if (idx >= count) return;
                    int qq = q_from + idx;
                    json row;
                    try {
                        DeltaComputation dc =
                            compute_delta(qq, BasisKind::Symmetrized, tol, !no_timings);
                        row = std::move(dc.report);
                    } catch (const std::exception& e) {
                        row["q"] = qq;
                        row["error"] = e.what();
                    }
                    row["cyclic_delta"] = sig12(cyclic_delta(qq));
                    rows[static_cast<size_t>(idx)] = std::move(row);
                }
            };
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(run_rows);
            for (auto& th : pool) th.join();
            if (format == "csv") {
                std::ostringstream os;
                os << "q,case,basis_size,rho,delta,method,cyclic_delta";
                for (const auto& row : rows) {
                    os << "\n" << row["q"].get<int>() << ",";
                    if (row.contains("error")) {
                        os << ",,,,error:" << row["error"].get<std::string>() << ",";
                    } else {
                        os << row["case"].get<std::string>() << "," << row["basis_size"].get<int>()
                           << "," << row["rho"].get<std::string>() << ","
                           << row["delta"].get<std::string>() << ","
                           << row["method_tags"][0].get<std::string>() << ",";
                    }
                    os << row["cyclic_delta"].get<std::string>();
                }
                emit(os.str(), out_path);
            } else {
                std::ostringstream os;
                for (size_t i = 0; i < rows.size(); ++i) {
                    if (i) os << "\n";
                    os << rows[i].dump();
                }
                emit(os.str(), out_path);
            }
            return 0;
        }

        if (cmd_matrix->parsed() || cmd_charpoly->parsed()) {
            BasisKind basis = basis_str == "full" ? BasisKind::Full : BasisKind::Symmetrized;
            PicMatrix pm = map_str == "cyclic" ? build_cyclic(q) : build_pullback(q, basis);
            if (cmd_matrix->parsed()) {
                emit(format == "csv" ? matrix_to_csv(pm) : matrix_to_json(pm), out_path);
            } else {
                json rep{{"q", q},
                         {"case", to_string(pm.kind)},
                         {"basis_kind", pm.basis == BasisKind::Full ? "full" : "symmetrized"},
                         {"map", map_str},
                         {"basis_size", pm.size()},
                         {"charpoly", poly_json(charpoly(pm.m))}};
                emit(rep.dump(), out_path);
            }
            return 0;
        }

        if (cmd_oracle->parsed()) {
            if (trials < 2) throw UnsupportedQ("at least two trials required");
            OracleOptions opts;
            opts.degree_cap = degree_cap;
            opts.prime_rank = prime_rank;
            MapKind mk = map_str == "cyclic" ? MapKind::Cyclic : MapKind::SymmetricCyclic;
            DegreeSequence seq = run_oracle(q, mk, depth, trials, seed, opts);
            json rep = json::parse(seq.to_json());
            if (mk == MapKind::Cyclic || q != 4) {
                PicMatrix fullm =
                    mk == MapKind::Cyclic ? build_cyclic(q) : build_pullback(q, BasisKind::Full);
                CompareReport cr = compare(seq, fullm);
                rep["matrix_match"] = cr.ok;
                rep["compared_depth"] = cr.depth;
                if (!cr.ok) {
                    rep["mismatch_at"] = cr.mismatch_at;
                    emit(rep.dump(), out_path);
                    return kExitCrossCheck;
                }
            }
            emit(rep.dump(), out_path);
            return 0;
        }

        if (cmd_verify->parsed()) {
            LemmaReport rep = verify_orbit_lemmas(q);
            json out{{"q", rep.q}, {"all_pass", rep.all_pass()}};
            json checks = json::array();
            for (const auto& c : rep.checks) {
                json item{{"name", c.name}, {"pass", c.pass}};
                if (!c.pass) item["witness"] = c.witness;
                checks.push_back(std::move(item));
            }
            out["checks"] = std::move(checks);
            emit(out.dump(), out_path);
            return rep.all_pass() ? 0 : kExitCrossCheck;
        }
    } catch (const UnsupportedQ& e) {
        std::cerr << "unsupported input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const InvalidIndex& e) {
        std::cerr << "invalid index: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const DegenerateLine& e) {
        std::cerr << "oracle degeneracy: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const NonConvergence& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return kExitCrossCheck;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return 0;
}
