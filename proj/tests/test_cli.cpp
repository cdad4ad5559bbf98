#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string binary() {
    const char* env = std::getenv("SYMCYC_BIN");
    return env ? env : "./tools/symcyc";
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = binary() + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("delta reports the headline values") {
    RunResult r = run("delta --q 45 --no-timings");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"rho\":\"21.6051870235\"") != std::string::npos);
    CHECK(r.out.find("\"delta\":\"466.784106318\"") != std::string::npos);
    CHECK(r.out.find("\"case\":\"odd\"") != std::string::npos);
    CHECK(r.out.find("\"basis_size\":15") != std::string::npos);

    RunResult r30 = run("delta --q 30 --no-timings");
    CHECK(r30.exit_code == 0);
    CHECK(r30.out.find("\"delta\":\"203.347458968\"") != std::string::npos);

    RunResult r60 = run("delta --q 60 --no-timings");
    CHECK(r60.exit_code == 0);
    CHECK(r60.out.find("\"rho\":\"28.6450893597\"") != std::string::npos);
}

TEST_CASE("deterministic output with --no-timings") {
    RunResult a = run("delta --q 21 --closed-form --no-timings");
    RunResult b = run("delta --q 21 --closed-form --no-timings");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"closed_form_used\":true") != std::string::npos);

    RunResult o1 = run("oracle --q 9 --n 5 --seed 3");
    RunResult o2 = run("oracle --q 9 --n 5 --seed 3");
    CHECK(o1.exit_code == 0);
    CHECK(o1.out == o2.out);
    CHECK(o1.out.find("\"matrix_match\":true") != std::string::npos);
}

TEST_CASE("exit code contract") {
    CHECK(run("delta --q 2").exit_code == 2);
    CHECK(run("delta --q 4").exit_code == 2);  // only the cyclic map applies at q = 4
    CHECK(run("delta --q 7 --closed-form").exit_code == 2);
    CHECK(run("table --q-from 9 --q-to 5").exit_code == 2);
    CHECK(run("verify --q 12").exit_code == 0);
}

TEST_CASE("table output") {
    RunResult csv = run("table --q-from 5 --q-to 7 --format csv --no-timings");
    CHECK(csv.exit_code == 0);
    std::istringstream is(csv.out);
    std::string header;
    std::getline(is, header);
    CHECK(header == "q,case,basis_size,rho,delta,method,cyclic_delta");
    std::string row5, row6, row7;
    std::getline(is, row5);
    std::getline(is, row6);
    std::getline(is, row7);
    CHECK(row5.substr(0, 2) == "5,");
    CHECK(row5.find(",1,") != std::string::npos);  // integrable: delta = 1
    CHECK(row7.find("6.85410196625") != std::string::npos);

    RunResult js = run("table --q-from 3 --q-to 5 --no-timings");
    CHECK(js.exit_code == 0);
    CHECK(js.out.find("\"q\":4") != std::string::npos);
    CHECK(js.out.find("\"error\"") != std::string::npos);  // q=4 row carries an error field
}

TEST_CASE("matrix and charpoly export") {
    RunResult m = run("matrix --q 30 --basis symmetrized --format csv");
    CHECK(m.exit_code == 0);
    CHECK(m.out.find("label,H,E,A,") != std::string::npos);
    RunResult cj = run("charpoly --q 4 --map cyclic");
    CHECK(cj.exit_code == 0);
    CHECK(cj.out.find("\"basis_size\":9") != std::string::npos);

    RunResult file_out = run("matrix --q 5 --out /tmp/symcyc_cli_matrix.json");
    CHECK(file_out.exit_code == 0);
    std::ifstream f("/tmp/symcyc_cli_matrix.json");
    std::string line;
    std::getline(f, line);
    CHECK(line.find("\"q\":5") != std::string::npos);
}

TEST_CASE("delta with oracle cross-check") {
    RunResult r = run("delta --q 12 --check-oracle 4 --seed 2 --no-timings");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"oracle_checked\":true") != std::string::npos);
    CHECK(r.out.find("\"oracle_depth\":4") != std::string::npos);
}

TEST_CASE("matrix exports reproduce the golden fixtures") {
    const char* dir = std::getenv("SYMCYC_GOLDEN");
    REQUIRE(dir != nullptr);
    for (int q : {30, 45, 60}) {
        RunResult r = run("matrix --q " + std::to_string(q) + " --basis symmetrized");
        std::ifstream f(std::string(dir) + "/q" + std::to_string(q) + "_symmetrized.json");
        std::stringstream ss;
        ss << f.rdbuf();
        INFO("q = ", q);
        CHECK(r.out == ss.str());
    }
    RunResult csv = run("matrix --q 45 --basis symmetrized --format csv");
    std::ifstream f(std::string(dir) + "/q45_symmetrized.csv");
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(csv.out == ss.str());
}
