#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code = -1;
    std::string output;
};

fs::path scratch_file(const std::string& name) {
    std::ostringstream file;
    file << "moduli-calc-test-" << ::getpid() << "-" << name;
    return fs::temp_directory_path() / file.str();
}

CliResult run_cli(const std::string& args) {
    const fs::path out = scratch_file("out.txt");
    std::ostringstream cmd;
    cmd << "'" << MODULI_CALC_PATH << "' " << args << " > '" << out.string() << "' 2>&1";
    const int status = std::system(cmd.str().c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::ostringstream buf;
    buf << in.rdbuf();
    result.output = buf.str();
    fs::remove(out);
    return result;
}

fs::path write_scratch(const std::string& name, const std::string& text) {
    const fs::path p = scratch_file(name);
    std::ofstream out(p);
    out << text;
    return p;
}

} // namespace

TEST_CASE("repro runs the builtin registry") {
    CliResult r = run_cli("repro --all");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("RESULT: PASS") != std::string::npos);
    CHECK(r.output.find("== g13_4 (PASS)") != std::string::npos);
    CHECK(r.output.find("cite:") == std::string::npos);
}

TEST_CASE("repro explains a single scenario") {
    CliResult r = run_cli("repro --scenario g14_3 --explain");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("theta_K") != std::string::npos);
    CHECK(r.output.find("cite:") != std::string::npos);
    CHECK(r.output.find("consistency_delta = 16") != std::string::npos);
    CHECK(r.output.find("g12_7") == std::string::npos);
}

TEST_CASE("repro writes a json report") {
    const fs::path report = scratch_file("report.json");
    CliResult r = run_cli("repro --all --json '" + report.string() + "'");
    CHECK(r.exit_code == 0);
    std::ifstream in(report);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("\"all_pass\": true") != std::string::npos);
    fs::remove(report);
}

TEST_CASE("repro fails with exit 1 on a mismatch") {
    const fs::path bad = write_scratch(
        "bad-scenario.json",
        R"({"id":"tiny","kind":"lattice_lines","params":{"r":6},)"
        R"("expected":[{"description":"count","value":"28","citation":"deliberately wrong"}]})");
    CliResult r = run_cli("repro --scenario '" + bad.string() + "'");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("RESULT: FAIL") != std::string::npos);
    fs::remove(bad);
}

TEST_CASE("repro rejects unknown scenarios and malformed files") {
    CHECK(run_cli("repro --scenario no_such_scenario").exit_code == 2);
    const fs::path garbled = write_scratch("garbled.json", "{not json");
    CHECK(run_cli("repro --scenario '" + garbled.string() + "'").exit_code == 2);
    fs::remove(garbled);
    CHECK(run_cli("repro --all --scenario g13_4").exit_code == 2);
}

TEST_CASE("lattice lines") {
    CliResult r = run_cli("lattice lines --r 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"count\": 27") != std::string::npos);
    CHECK(run_cli("lattice lines --r 9").exit_code == 2);
}

TEST_CASE("lattice exclude") {
    CliResult ok = run_cli(
        R"(lattice exclude --class '{"lattice":"bl_6","coeffs":[13,-5,-5,-5,-5,-5,-5]}')");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"exclusion_holds\": true") != std::string::npos);

    CliResult split = run_cli(
        R"(lattice exclude --class '{"lattice":"bl_6","coeffs":[2,-1,0,0,0,0,0]}')");
    CHECK(split.exit_code == 1);

    CHECK(run_cli(R"(lattice exclude --class '{"lattice":"quadric","coeffs":[2,3]}')")
              .exit_code == 2);
}

TEST_CASE("graph check") {
    const std::string family1 =
        R"('{"vertices":[{"id":0,"g":0},{"id":1,"g":6}],)"
        R"("edges":[[0,1],[0,1],[0,1],[0,1],[0,1],[0,1],[0,1],[0,1]]}')";
    CliResult inside = run_cli("graph check --graph " + family1 + " --stratum irr");
    CHECK(inside.exit_code == 0);
    CHECK(inside.output.find("true") != std::string::npos);

    CliResult outside = run_cli("graph check --graph " + family1 + " --stratum 3");
    CHECK(outside.exit_code == 1);
    CHECK(outside.output.find("false") != std::string::npos);

    CHECK(run_cli("graph check --graph " + family1 + " --stratum nonsense").exit_code == 2);
    CHECK(run_cli("graph check --graph " + family1 + " --stratum 40").exit_code == 2);
    CHECK(run_cli(R"(graph check --graph '{"vertices":[{"id":0,"g":1},{"id":1,"g":1}],)"
                  R"("edges":[]}' --stratum irr)")
              .exit_code == 2);
}

TEST_CASE("intersect pairs classes from json") {
    CliResult r = run_cli(
        R"(intersect --curve '{"sig":{"g":3,"n":0},"lambda":"2","psi":{},)"
        R"("delta_total":"5","delta":[],"assume_rest_zero":true}')"
        R"( --divisor '{"sig":{"g":3,"n":0},"lambda":"13","psi":{},)"
        R"("delta_irr":"-2","delta":[]}')");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "16\n");

    CHECK(run_cli("intersect --curve '{bad' --divisor '{}'").exit_code == 2);
}

TEST_CASE("usage errors exit with 2, help with 0") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("lattice lines").exit_code == 2); // --r is required
}
