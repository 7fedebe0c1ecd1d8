// End-to-end checks of the command-line binary: exit codes carry the
// mathematical verdict, artifacts are byte-stable, and emitted files
// re-parse to equal values.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "topgen/io.hpp"

#ifndef TOPGEN_CLI_PATH
#define TOPGEN_CLI_PATH "topgen"
#endif
#ifndef TOPGEN_DATA_DIR
#define TOPGEN_DATA_DIR "."
#endif

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(TOPGEN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int rc = pclose(pipe);
    r.status = WEXITSTATUS(rc);
    return r;
}

std::string data(const std::string& name) {
    return std::string(TOPGEN_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("cli check verdicts and exit codes") {
    RunResult obstructed = run("check --spec " + data("two_transvections_sl3.json"));
    CHECK(obstructed.status == 2);
    CHECK(obstructed.out.find("EigenspaceObstruction") != std::string::npos);
    CHECK(obstructed.out.find("witness 1") != std::string::npos);

    RunResult generating = run("check --spec " + data("regular_pair_sl3.json"));
    CHECK(generating.status == 0);
    CHECK(generating.out.find("Generating") != std::string::npos);

    RunResult quad = run("check --spec " + data("quad_pair_sl4.json"));
    CHECK(quad.status == 2);
    CHECK(quad.out.find("QuadraticPairObstruction") != std::string::npos);

    RunResult sl2 = run("check --spec " + data("sl2_involution_pair.json"));
    CHECK(sl2.status == 2);
    CHECK(sl2.out.find("SL2InvolutionObstruction") != std::string::npos);

    RunResult missing = run("check --spec /nonexistent.json");
    CHECK(missing.status == 1);
}

TEST_CASE("cli alpha table") {
    RunResult r = run("alpha --n 6");
    CHECK(r.status == 0);
    CHECK(r.out.find("6,2,30,30,60,72,81") != std::string::npos);
}

TEST_CASE("cli restrict round-trips") {
    RunResult r = run("restrict --spec " + data("regular_triple_sl4.json"));
    CHECK(r.status == 0);
    auto restricted = topgen::io::parse_tuple(r.out);
    CHECK(restricted.n() == 3);
    CHECK(topgen::io::tuple_to_json(restricted) == r.out);
}

TEST_CASE("cli simulate determinism") {
    const std::string args = "simulate --n 3 --q 2 --r 7 --s 7 --samples 120 --seed 1";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find(",120,") != std::string::npos);
    CHECK(a.out.find(",1\n") != std::string::npos);

    RunResult other = run("simulate --n 3 --q 2 --r 7 --s 7 --samples 120 --seed 2");
    CHECK(other.out != a.out); // the seed is live
}

TEST_CASE("cli audit and classify exit codes") {
    CHECK(run("audit-sl3 --spec " + data("regular_pair_sl3.json")).status == 0);
    CHECK(run("audit-sl3 --spec " + data("two_transvections_sl3.json")).status == 1);
    CHECK(run("classify --n 3 --q 2 --r 7 --s 7").status == 0);
    RunResult shapes = run("shapes --n 3 --q 4 --r 3");
    CHECK(shapes.status == 0);
    CHECK(shapes.out.find("realizable") != std::string::npos);
}

TEST_CASE("cli oracle suite") {
    RunResult r = run("verify-oracles --quick");
    CHECK(r.status == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("[PASS] SL_2(3) exact generation table") != std::string::npos);
}
