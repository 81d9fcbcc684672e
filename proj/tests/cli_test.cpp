#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cusp/cli.hpp"
#include "cusp/cuspidal.hpp"

using namespace cusp;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
    int count = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) ++count;
    return count;
}

// Writes a dataset variant to a temp file and returns the path.
std::string write_temp_dataset(const std::string& content, const std::string& name) {
    std::string path = std::string("cusptheta_test_") + name + ".tsv";
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("verify --all passes on the shipped dataset") {
    RunResult r = run({"verify", "--all"});
    CHECK(r.code == 0);
    CHECK(r.out.find("result: 36/36 records pass") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify is byte-deterministic") {
    RunResult a = run({"verify", "--all"});
    RunResult b = run({"verify", "--all"});
    CHECK(a.out == b.out);
    RunResult t1 = run({"tmatrix", "--group", "S4"});
    RunResult t2 = run({"tmatrix", "--group", "S4"});
    CHECK(t1.out == t2.out);
}

TEST_CASE("verify --rows selects a slice; an empty slice is header-only") {
    RunResult r = run({"verify", "--rows", "3..5", "--format", "tsv"});
    CHECK(r.code == 0);
    // Header plus rows 3 (x2), 4, 5 (x2).
    CHECK(count_lines_starting(r.out, "3\t") == 2);
    CHECK(count_lines_starting(r.out, "4\t") == 1);
    CHECK(count_lines_starting(r.out, "5\t") == 2);

    RunResult empty = run({"verify", "--rows", "19..3", "--format", "tsv"});
    CHECK(empty.code == 0);
    CHECK(empty.out == "row\tclass\texpected\tdeduced-set\tverdict\n");

    RunResult single = run({"verify", "--rows", "22", "--format", "tsv"});
    CHECK(single.code == 0);
    CHECK(count_lines_starting(single.out, "22\t") == 1);
}

TEST_CASE("verify tsv rows carry the record verdicts") {
    RunResult r = run({"verify", "--rows", "15..15", "--format", "tsv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("15\tE7\tz3^1\t{z3^1,z3^2}\tderived-set") != std::string::npos);
    CHECK(r.out.find("15\tE7\tz3^2\t{z3^1,z3^2}\tderived-set") != std::string::npos);
}

TEST_CASE("distinct --all prints exactly the two known collisions") {
    RunResult r = run({"distinct", "--all"});
    CHECK(r.code == 0);
    CHECK(count_lines_starting(r.out, "collision") == 2);
    CHECK(r.out.find("collision F4 p=2: F4(a2) (row 7) ~ F4(a3) (row 8), theta = 1") !=
          std::string::npos);
    CHECK(r.out.find("collision E8 p=2: D8(a1) (row 19) ~ 2A4 (row 20), theta = 1") !=
          std::string::npos);

    RunResult g2 = run({"distinct", "--group", "G2", "--p", "3"});
    CHECK(g2.code == 0);
    CHECK(count_lines_starting(g2.out, "collision") == 0);
}

TEST_CASE("theta query prints the expected value and the applied rules") {
    RunResult r = run({"theta", "--group", "G2", "--p", "2", "--class", "G2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("expected theta: -1") != std::string::npos);
    CHECK(r.out.find("central + p-torsion + Springer-Lou") != std::string::npos);
    CHECK(r.out.find("derived-unique") != std::string::npos);

    RunResult missing = run({"theta", "--group", "G2", "--p", "5", "--class", "G2"});
    CHECK(missing.code == 2);
}

TEST_CASE("deduce prints one trace per record of a row") {
    RunResult r = run({"deduce", "--row", "23"});
    CHECK(r.code == 0);
    CHECK(count_lines_starting(r.out, "row 23") == 4);
    CHECK(r.out.find("Springer-Lou") != std::string::npos);

    CHECK(run({"deduce", "--row", "25"}).code == 2);
    CHECK(run({"deduce", "--row", "0"}).code == 2);
}

TEST_CASE("chartable emits the classes, sizes, and exact values") {
    RunResult r = run({"chartable", "--group", "S3"});
    CHECK(r.code == 0);
    // Class reps are the lex-least members: (1 2) among transpositions.
    CHECK(r.out ==
          "class\te\t(1 2)\t(0 1 2)\n"
          "size\t1\t3\t2\n"
          "3\t1\t1\t1\n"
          "21\t2\t0\t-1\n"
          "111\t1\t-1\t1\n");
}

TEST_CASE("tmatrix emits the spectrum with the dimension check line") {
    RunResult r = run({"tmatrix", "--group", "S3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# sum dim^2 = 36 (order^2 = 36)") != std::string::npos);
    CHECK(count_lines_starting(r.out, "class_rep") == 1);
    // 8 object rows + header + trailer.
    CHECK(count_lines_starting(r.out, "#") == 1);
}

TEST_CASE("selftest passes") {
    RunResult r = run({"selftest"});
    CHECK(r.code == 0);
    CHECK(r.out.find("selftest passed") != std::string::npos);
}

TEST_CASE("argument errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "--rows"}).code == 2);
    CHECK(run({"verify", "--rows", "x..y"}).code == 2);
    CHECK(run({"theta", "--group", "G2"}).code == 2);
    CHECK(run({"chartable"}).code == 2);
    CHECK(run({"chartable", "--group", "Q8"}).code == 2);
    CHECK(run({"verify", "--all", "--format", "xml"}).code == 2);
    CHECK(run({"verify", "--all", "--dataset", "/nonexistent/path.tsv"}).code == 2);
}

TEST_CASE("a perturbed dataset theta makes verify fail naming the row") {
    std::string text = embedded_dataset();
    size_t pos = text.find("22\tE8\t3\t2A4\tfalse\tS5\teps\t11111\te\t1");
    REQUIRE(pos != std::string::npos);
    std::string bad = text;
    bad.replace(pos, std::string("22\tE8\t3\t2A4\tfalse\tS5\teps\t11111\te\t1").size(),
                "22\tE8\t3\t2A4\tfalse\tS5\teps\t11111\te\t-1");
    std::string path = write_temp_dataset(bad, "perturbed");
    RunResult r = run({"verify", "--all", "--dataset", path});
    std::remove(path.c_str());
    CHECK(r.code == 1);
    CHECK(r.out.find("row 22") != std::string::npos);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("THETA_DATASET environment override is honored") {
    std::string path = write_temp_dataset(embedded_dataset(), "env");
    setenv("THETA_DATASET", path.c_str(), 1);
    RunResult r = run({"verify", "--all"});
    unsetenv("THETA_DATASET");
    std::remove(path.c_str());
    CHECK(r.code == 0);
    CHECK(r.out.find("result: 36/36 records pass") != std::string::npos);

    setenv("THETA_DATASET", "/nonexistent/file.tsv", 1);
    RunResult bad = run({"verify", "--all"});
    unsetenv("THETA_DATASET");
    CHECK(bad.code == 2);
}

TEST_CASE("help is available") {
    RunResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("subcommands") != std::string::npos);
}
