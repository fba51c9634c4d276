#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// Drives the installed binary through a shell; CAGEKIT_BIN is injected by the
// test harness.

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

RunResult run(const std::string& args) {
    const char* bin = std::getenv("CAGEKIT_BIN");
    REQUIRE(bin != nullptr);
    const std::string err_path = "/tmp/cagekit_test_stderr.txt";
    std::string cmd = std::string(bin) + " " + args + " 2>" + err_path;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    return r;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("moore verb") {
    RunResult r = run("moore --k 3 --g 6");
    CHECK(r.code == 0);
    CHECK(r.out == "14\nexcess-4 order: 18\n");

    r = run("moore --k 7 --g 6 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "k,g,moore_bound,excess4_order\n7,6,86,90\n");

    r = run("moore --k 57 --g 5 --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["moore_bound"] == "3250");
    CHECK(j["excess4_order"] == "3254");
}

TEST_CASE("poly verb") {
    RunResult r = run("poly H --k 3 --i 2 --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["family"] == "H");
    CHECK(j["coeffs"] == nlohmann::json::array({"-2", "0", "1"}));

    r = run("poly F --k 4 --i 0");
    CHECK(r.code == 0);
    CHECK(!r.out.empty());

    r = run("poly Q --k 3 --i 2");
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("cyclotomic verb") {
    RunResult r = run("cyclotomic --l 6");
    CHECK(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0].rfind("Phi_6 = ", 0) == 0);
    CHECK(ls[1].rfind("f_6 = ", 0) == 0);

    r = run("cyclotomic --l 1");  // no half-trace below l = 3
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 1);
}

TEST_CASE("factor verb") {
    RunResult r = run("factor --coeffs [-1,-12,0,1]");
    CHECK(r.code == 0);
    CHECK(r.out.find("IRREDUCIBLE") != std::string::npos);
    CHECK(r.out.find("rational-root-exhaustion") != std::string::npos);

    r = run("factor --coeffs [2,-12,0,1]");
    CHECK(r.code == 0);
    CHECK(r.out.find("eisenstein, p = 2") != std::string::npos);

    r = run("factor --coeffs [4,0,0,0,1] --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "REDUCIBLE");
    CHECK(j["witness"]["type"] == "factors");

    r = run("factor --coeffs nope");
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("excess-graph verb") {
    RunResult r = run("excess-graph --graph mcgee");
    CHECK(r.code == 0);
    CHECK(r.out == "[4,4,4,4,4,4]\n");

    r = run("excess-graph --graph heawood");
    CHECK(r.code == 0);
    CHECK(r.out == "[]\n");

    r = run("excess-graph --graph6 'Cr'");  // 4-cycle: valency too small
    CHECK(r.code == 0);
    CHECK(r.out.rfind("NOT_APPLICABLE:", 0) == 0);

    r = run("excess-graph --graph mcgee --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "graph,classification,cycle_lengths\nmcgee,POLYCYCLIC,[4,4,4,4,4,4]\n");

    r = run("excess-graph --graph6 'C'");  // truncated graph6
    CHECK(r.code == 2);
}

TEST_CASE("verify verb") {
    RunResult r = run("verify --graph pappus");
    CHECK(r.code == 0);
    CHECK(r.out.find("overall: PASS") != std::string::npos);
    CHECK(r.out.find("annihilator: holds") != std::string::npos);
    CHECK(r.out.find("spectrum: max residual") != std::string::npos);

    r = run("verify --graph pappus --tol 1e-30");
    CHECK(r.code == 1);
    CHECK(r.err.find("verification failed: spectrum") != std::string::npos);

    r = run("verify --graph pappus --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["overall"] == true);
    CHECK(j["graph"]["n"] == 18);
    CHECK(j["profile"]["girth"] == 6);
    CHECK(j["profile"]["excess"] == "4");
    REQUIRE(j["identities"].size() == 4);
    for (const auto& rep : j["identities"]) {
        CHECK(rep["applicable"] == true);
        CHECK(rep["holds"] == true);
    }
    CHECK(j["spectrum"]["ok"] == true);
    CHECK(j["excess_graph"]["classification"] == "POLYCYCLIC");

    r = run("verify --graph nonesuch");
    CHECK(r.code == 2);
}

TEST_CASE("scan verb") {
    RunResult r = run("scan --k 7 --g 8 --scope cyclic");
    CHECK(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "k=7 g=8 scope=CYCLIC_EXCESS4 verdict=NONEXISTENT rules=R-CYC3;R-CYC6");
    CHECK(ls[1] == "summary: nonexistent=1 open=0 not_covered=0");

    r = run("scan --k 6..8 --g 8..12 --format csv");  // default scope list
    CHECK(r.code == 0);
    ls = lines(r.out);
    CHECK(ls[0] == "k,g,scope,verdict,rule_ids,certificates");
    CHECK(ls.size() == 1 + 3 * 3 * 3);

    r = run("scan --k 7 --g 8 --scope bicyclic --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["verdict"] == "NONEXISTENT");
    CHECK(j["rows"][0]["rule_ids"][0] == "R-BICYCLIC");
    CHECK(j["rows"][0]["certificates"].size() == 2);
    CHECK(j["summary"]["nonexistent"] == 1);

    r = run("scan --k 7..6 --g 8 --scope cyclic");
    CHECK(r.code == 2);
    r = run("scan --k 7 --g 8 --scope nonesuch");
    CHECK(r.code == 2);
}

TEST_CASE("output redirection") {
    const std::string path = "/tmp/cagekit_test_out.txt";
    std::remove(path.c_str());
    RunResult r = run("moore --k 3 --g 6 --out " + path);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == "14\nexcess-4 order: 18\n");
    std::remove(path.c_str());
}

TEST_CASE("usage errors") {
    CHECK(run("").code == 2);              // a subcommand is required
    CHECK(run("nonesuch").code == 2);      // unknown verb
    CHECK(run("moore --k 3").code == 2);   // missing required option
    CHECK(run("moore --k 3 --g 6 --format xml").code == 2);
    CHECK(run("verify --graph pappus --graph6 Cr").code == 2);  // exclusive options
    CHECK(run("--help").code == 0);
}
