// Golden tests for the command-line tool.  The binary path and data
// directory come from the LIEBASIS_CLI / LIEBASIS_DATA environment variables
// (set by the test harness).

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli_path() {
    const char* p = std::getenv("LIEBASIS_CLI");
    REQUIRE(p != nullptr);
    return p;
}

std::string data_dir() {
    const char* d = std::getenv("LIEBASIS_DATA");
    REQUIRE(d != nullptr);
    return d;
}

std::string golden_dir() {
    const char* d = std::getenv("LIEBASIS_GOLDEN");
    REQUIRE(d != nullptr);
    return d;
}

struct RunResult {
    int status;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    const int raw = pclose(p);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string golden(const std::string& name) {
    std::ifstream in(golden_dir() + "/" + name);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("cli: counts") {
    auto r = run("count --alphabet x,y --length 6");
    CHECK(r.status == 0);
    CHECK(r.output == "9\n");
    r = run("count --alphabet x,y,z --multidegree 2,2,2");
    CHECK(r.status == 0);
    CHECK(r.output == "14\n");
}

TEST_CASE("cli: word listings match golden files") {
    auto r = run("words --alphabet x,y --multidegree 3,4");
    CHECK(r.status == 0);
    CHECK(r.output == golden("words_xy_34.txt"));

    r = run("words --alphabet x,y,z --set bhat --multidegree 2,2,2");
    CHECK(r.status == 0);
    CHECK(r.output == golden("words_bhat_222.txt"));
}

TEST_CASE("cli: bracketing maps") {
    auto r = run("basis --alphabet 1,2,3 --map L 112");
    CHECK(r.status == 0);
    CHECK(r.output == "[[2,1],1]\n");
    r = run("basis --alphabet x,y --map classical xxxyyyy");
    CHECK(r.status == 0);
    CHECK(r.output == "[x,[x,[[[[x,y],y],y],y]]]\n");
}

TEST_CASE("cli: pairing with method cross-check") {
    auto r = run("pair --alphabet x,y --left xxyy --right '[[[y,x],y],x]' --method all");
    CHECK(r.status == 0);
    CHECK(r.output.find("agreement\tyes") != std::string::npos);
}

TEST_CASE("cli: expansion of a bracket in the configuration family") {
    const auto r = run("expand --alphabet x,y --tree '[[[[[[x,y],y],x],x],y],y]'");
    CHECK(r.status == 0);
    CHECK(r.output == golden("expand_ell_34.txt"));
}

TEST_CASE("cli: pairing matrix against a fixture") {
    const auto r = run("matrix --alphabet x,y,z --multidegree 2,2,2 --rows bar-lyndon "
                       "--cols fixture --fixture " +
                       data_dir() + "/fixture_rightnormed_222.tsv");
    CHECK(r.status == 0);
    CHECK(r.output == golden("matrix_rightnormed_222.txt"));
}

TEST_CASE("cli: verification suite") {
    const auto r = run("verify --alphabet x,y --suite duality --max-n 5");
    CHECK(r.status == 0);
    CHECK(r.output.find("pass") != std::string::npos);
}

TEST_CASE("cli: usage errors exit with 2") {
    CHECK(run("words --alphabet x,y").status == 2);       // missing length/multidegree
    CHECK(run("count --alphabet x,y").status == 2);
    CHECK(run("basis --alphabet x,y --map L xx").status == 2);  // no decomposition
    CHECK(run("nonsense").status == 2);
}
