#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

using ordered_json = nlohmann::ordered_json;

namespace {

struct CmdResult {
    int status = -1;
    std::string out;  // stdout and stderr interleaved
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ADE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    const int raw = pclose(pipe);
    res.status = WEXITSTATUS(raw);
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string write_temp_corpus(const std::string& name, const std::string& body) {
    const std::string path = "/tmp/ade_cli_" + name + ".corpus";
    std::ofstream out(path);
    out << body;
    return path;
}

// A JSON report must re-render byte-identically after a parse round-trip.
void check_roundtrip(const std::string& args) {
    const CmdResult res = run_cli("--json " + args);
    REQUIRE(res.status == 0);
    const ordered_json j = ordered_json::parse(res.out);
    CHECK(j.dump(2) + "\n" == res.out);
}

} // namespace

// ---------------------------------------------------------------------------
// exit codes
// ---------------------------------------------------------------------------

TEST_CASE("success, computation error, and usage error exit codes") {
    CHECK(run_cli("milnor \"x^3 + y^2\"").status == 0);
    const CmdResult noniso = run_cli("milnor \"x^2*y\"");
    CHECK(noniso.status == 1);
    CHECK(contains(noniso.out, "non-isolated singularity"));
    CHECK(run_cli("").status == 64);
    CHECK(run_cli("frobnicate").status == 64);
    CHECK(run_cli("classify").status == 64);
    CHECK(run_cli("weyl-info B2").status == 1);
    CHECK(run_cli("classify \"x^3 + y^6\"").status == 1);
}

TEST_CASE("verification mismatch exits with code 2") {
    const std::string path =
        write_temp_corpus("wrongname", "E6 ; x^3 + x*y^3\n");
    const CmdResult res = run_cli("corpus " + path);
    CHECK(res.status == 2);
    CHECK(contains(res.out, "expected-name"));
    std::remove(path.c_str());
}

// ---------------------------------------------------------------------------
// singularity verbs
// ---------------------------------------------------------------------------

TEST_CASE("classify prints the full report") {
    const CmdResult res = run_cli("classify \"x^3 + x*y^3\"");
    CHECK(res.status == 0);
    CHECK(contains(res.out, "type: E7"));
    CHECK(contains(res.out, "mu: 7"));
    CHECK(contains(res.out, "h: 18"));
    CHECK(contains(res.out, "exponents: 1 5 7 9 11 13 17"));
}

TEST_CASE("polynomial verbs accept explicit variable names") {
    const CmdResult res = run_cli("milnor \"u^3 + v^3\" --vars u,v");
    CHECK(res.status == 0);
    CHECK(contains(res.out, "mu: 4"));
    // Detection picks the same names alphabetically.
    CHECK(contains(run_cli("milnor \"u^3 + v^3\"").out, "mu: 4"));
}

TEST_CASE("spectrum, modality, signature, newton") {
    const CmdResult sp = run_cli("spectrum \"x^3 + y^2\"");
    CHECK(sp.status == 0);
    CHECK(contains(sp.out, "spectrum: -1/6 1/6"));
    CHECK(contains(sp.out, "monodromy order: 6"));

    CHECK(contains(run_cli("modality \"x^4 + y^4\"").out, "modality: 1"));
    CHECK(contains(run_cli("modality \"x^3 + y^2\"").out, "modality: 0"));

    const CmdResult sig = run_cli("signature \"x^3 + y^5\"");
    CHECK(contains(sig.out, "signature (3 variables): mu- 8  mu0 0  mu+ 0"));

    const CmdResult newt = run_cli("newton \"x^5 + x^2*y^2 + y^5\"");
    CHECK(newt.status == 0);
    CHECK(contains(newt.out, "vertices: (0,5) (2,2) (5,0)"));
    CHECK(contains(newt.out, "convenient: yes"));
    CHECK(contains(newt.out, "newton number: 11"));
}

// ---------------------------------------------------------------------------
// weyl and braid verbs
// ---------------------------------------------------------------------------

TEST_CASE("weyl-info reports group data") {
    const CmdResult res = run_cli("weyl-info E6");
    CHECK(res.status == 0);
    CHECK(contains(res.out, "weyl group order: 51840"));
    CHECK(contains(res.out, "coxeter number: 12"));
    CHECK(contains(res.out, "exponents: 1 4 5 7 8 11"));
    CHECK(contains(res.out, "cartan form: positive-definite"));
}

TEST_CASE("hurwitz-orbit sizes and budget limit") {
    const CmdResult res = run_cli("hurwitz-orbit D4");
    CHECK(res.status == 0);
    CHECK(contains(res.out, "orbit size: 162"));
    CHECK(run_cli("hurwitz-orbit D4 --budget 5").status == 1);
}

// ---------------------------------------------------------------------------
// verification verbs
// ---------------------------------------------------------------------------

TEST_CASE("verify deligne, trace, monodromy, mu-const all pass") {
    const CmdResult del = run_cli("verify deligne A3");
    CHECK(del.status == 0);
    CHECK(contains(del.out, "orbit: 16"));
    CHECK(contains(del.out, "enumerated: 16"));
    CHECK(contains(del.out, "pass: yes"));

    const CmdResult tr = run_cli("verify trace A2");
    CHECK(tr.status == 0);
    CHECK(contains(tr.out, "mode: exhaustive"));
    CHECK(contains(tr.out, "tuples: 9"));
    CHECK(contains(tr.out, "mismatches: 0"));

    const CmdResult trs = run_cli("verify trace D4 --samples 500 --seed 7");
    CHECK(trs.status == 0);
    CHECK(contains(trs.out, "mode: sampled (500 samples, seed 7)"));
    CHECK(contains(trs.out, "mismatches: 0"));

    const CmdResult mon = run_cli("verify monodromy E8");
    CHECK(mon.status == 0);
    CHECK(contains(mon.out, "trace: -1"));

    const CmdResult mc = run_cli("verify mu-const \"x^5 + x^2*y^2 + y^5\"");
    CHECK(mc.status == 0);
    CHECK(contains(mc.out, "vacuous: no"));
    CHECK(contains(mc.out, "t=1/2: isolated yes, mu 11, diagram equal yes"));

    const CmdResult vac = run_cli("verify mu-const \"x^3 + y^4\" --t 2,-3/7");
    CHECK(vac.status == 0);
    CHECK(contains(vac.out, "vacuous: yes"));
}

// ---------------------------------------------------------------------------
// corpus runs
// ---------------------------------------------------------------------------

TEST_CASE("the bundled corpus passes every check") {
    const CmdResult res = run_cli(std::string("corpus ") + ADE_CORPUS_PATH);
    CHECK(res.status == 0);
    CHECK(contains(res.out, "corpus: 24 germs, 24 classified, all checks pass"));

    const CmdResult js = run_cli(std::string("--json corpus ") + ADE_CORPUS_PATH);
    const ordered_json j = ordered_json::parse(js.out);
    CHECK(j["entries"].size() == 24);
    CHECK(j["pass"] == true);
}

TEST_CASE("a boundary germ is reported and the run continues") {
    const std::string path = write_temp_corpus(
        "boundary", "bad ; x^3 + y^6\nA2 ; x^3 + y^2\n");
    const CmdResult res = run_cli("corpus " + path);
    CHECK(res.status == 2);
    CHECK(contains(res.out, "error (not-simple)"));
    CHECK(contains(res.out, "A2: type A2"));
    std::remove(path.c_str());
}

TEST_CASE("an empty corpus is an empty pass") {
    const std::string path = write_temp_corpus("empty", "# nothing here\n");
    const CmdResult res = run_cli("corpus " + path);
    CHECK(res.status == 0);
    CHECK(contains(res.out, "0 germs"));
    std::remove(path.c_str());
}

TEST_CASE("a missing corpus file is a computation error") {
    CHECK(run_cli("corpus /nonexistent/nope.corpus").status == 1);
}

// ---------------------------------------------------------------------------
// json round-trips
// ---------------------------------------------------------------------------

TEST_CASE("json reports round-trip byte-identically") {
    check_roundtrip("classify \"x^3 + x*y^3\"");
    check_roundtrip("spectrum \"x^2*y + y^6\"");
    check_roundtrip("milnor \"x^3 + y^4\"");
    check_roundtrip("modality \"x^4 + y^4\"");
    check_roundtrip("signature \"x^3 + y^5\"");
    check_roundtrip("newton \"x^5 + x^2*y^2 + y^5\"");
    check_roundtrip("weyl-info E8");
    check_roundtrip("hurwitz-orbit A3 --list");
    check_roundtrip("verify deligne A2");
    check_roundtrip("verify trace A2");
    check_roundtrip("verify monodromy D5");
    check_roundtrip("verify mu-const \"x^5 + x^2*y^2 + y^5\"");
    check_roundtrip(std::string("corpus ") + ADE_CORPUS_PATH);
}
