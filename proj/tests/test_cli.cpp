// Golden tests for the command-line surface: exit codes, report shape, and
// byte determinism.  The binary path and corpus directory come from the
// build system.

#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#ifndef CREMONA_CLI_PATH
#error "CREMONA_CLI_PATH must be defined by the build"
#endif
#ifndef CREMONA_CORPUS_DIR
#error "CREMONA_CORPUS_DIR must be defined by the build"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CREMONA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string corpus_file(const std::string& name) {
    return std::string(CREMONA_CORPUS_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("exit code contract") {
    // 0: success.
    CHECK(run("rho " + corpus_file("a1_a2_n4.map") + " -m a1").exit_code == 0);
    // 1: usage and parse errors.
    CHECK(run("no-such-command").exit_code == 1);
    CHECK(run("parse --expr 'X0^-1' -n 2").exit_code == 1);
    CHECK(run("parse --expr '2X0' -n 2").exit_code == 1);
    CHECK(run("rho " + corpus_file("a1_a2_n4.map")).exit_code == 1);  // missing -m
    // 2: precondition violations.
    CHECK(run("rho " + corpus_file("involution_n3.map") + " -m involution").exit_code == 2);
    CHECK(run("rho " + corpus_file("a1_a2_n4.map") + " -m nonexistent").exit_code == 2);
    CHECK(run("rho /no/such/file.map -m a1").exit_code == 2);
    CHECK(run("predict-leading " + corpus_file("a1_a2_n4.map") +
              " -m a1 --poly 'X1*X2 + X3*X4'")
              .exit_code == 2);  // hypothesis violation
    // 3: verification failures.
    CHECK(run("gform " + corpus_file("a1_a2_n4.map") + " -m a1 --inverse a2").exit_code == 3);
    CHECK(run("freegroup --len 2 --imageA '1,0;0,1' --imageB '1,2;0,1'").exit_code == 3);
    CHECK(run("freegroup --pingpong 1").exit_code == 3);
}

TEST_CASE("reports carry the stated fields") {
    const RunResult r = run("rho " + corpus_file("a1_a2_n4.map") + " -m a1");
    CHECK(r.out.find("\"command\": \"rho\"") != std::string::npos);
    CHECK(r.out.find("\"input_digest\": \"fnv1a:") != std::string::npos);
    CHECK(r.out.find("\"status\": \"ok\"") != std::string::npos);
    CHECK(r.out.find("\"result\"") != std::string::npos);
}

TEST_CASE("stated command examples") {
    // rho of a1: column 3 is (1, -1, 1, 0).
    const RunResult rho = run("rho " + corpus_file("a1_a2_n4.map") + " -m a1");
    CHECK(rho.out.find("\"-1\"") != std::string::npos);

    // The conjugated shear contracts X3 = 0 to the last coordinate point.
    const RunResult c =
        run("contracts " + corpus_file("shear_n4_d2.map") + " -m a2_conj_lambda --hyperplane 3");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("\"contracts\": true") != std::string::npos);

    // The shear itself does not contract it.
    const RunResult n =
        run("contracts " + corpus_file("shear_n4_d2.map") + " -m lambda --hyperplane 3");
    CHECK(n.exit_code == 0);
    CHECK(n.out.find("\"contracts\": false") != std::string::npos);

    // freegroup certificate with word count 4 * (3^(l-1)) + ... cumulative.
    const RunResult f = run("freegroup --len 5");
    CHECK(f.exit_code == 0);
    CHECK(f.out.find("\"words_checked\": 485") != std::string::npos);

    // compose a1 with its inverse: the identity, projectively.
    const RunResult comp = run("compose " + corpus_file("a1_a2_n4.map") + " -g a1 -f a1_inv");
    CHECK(comp.exit_code == 0);
    CHECK(comp.out.find("\"X0\"") != std::string::npos);
}

TEST_CASE("corpus determinism across runs and worker counts") {
    const RunResult once = run("corpus --jobs 1");
    const RunResult twice = run("corpus --jobs 1");
    const RunResult wide = run("corpus --jobs 5");
    CHECK(once.exit_code == 0);
    CHECK(once.out == twice.out);
    CHECK(once.out == wide.out);
    CHECK(once.out.find("\"failures\": 0") != std::string::npos);
}

TEST_CASE("corpus validates the bundled witness files") {
    const RunResult r = run("corpus --dir " + std::string(CREMONA_CORPUS_DIR));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"failures\": 0") != std::string::npos);
    CHECK(r.out.find("bundled_shear_n4_d2.map") != std::string::npos);
}
