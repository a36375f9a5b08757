#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "weylchar/cli.hpp"

using weylchar::run_cli;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << body;
    return path.string();
}

}  // namespace

TEST_CASE("irr prints both polynomial forms") {
    CliRun r = cli({"irr", "--label", "-|1,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("C(X1,2)") != std::string::npos);
    CHECK(r.out.find("C(Y1,2)") != std::string::npos);
    CHECK(r.out.find("X1*Y1") != std::string::npos);

    CliRun s = cli({"irr", "--label", "1|1"});
    CHECK(s.code == 0);
    CHECK(s.out.find("X1^2 - Y1^2 - 2*X1 + 2*Y1") != std::string::npos);
}

TEST_CASE("table of B_0 and B_2") {
    CliRun r = cli({"table", "--group", "BC", "--n", "0", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "irreducible,-|-\n-|-,1\n");

    CliRun j = cli({"table", "--group", "BC", "--n", "2", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"1|1\"") != std::string::npos);
    // deterministic output
    CHECK(cli({"table", "--group", "BC", "--n", "2", "--format", "json"}).out == j.out);
}

TEST_CASE("fit from a data file") {
    std::string path = write_temp(
        "weylchar_fit_test.json",
        R"({"0": {"-|-": "0"},
            "1": {"1|-": "1", "-|1": "-1"},
            "2": {"2|-": "0", "1,1|-": "2", "1|1": "0", "-|2": "0", "-|1,1": "-2"}})");
    CliRun r = cli({"fit", "--degree", "1", "--data", path, "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("X1 - Y1") != std::string::npos);

    CliRun bad = cli({"fit", "--degree", "3", "--data", path});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("DegenerateFit") != std::string::npos);
}

TEST_CASE("verify suites") {
    CliRun r = cli({"verify", "--suite", "orthogonality", "--max-n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 failed") != std::string::npos);
    CliRun o = cli({"verify", "--suite", "oracle", "--max-n", "3"});
    CHECK(o.code == 0);
}

TEST_CASE("app pipeline command") {
    CliRun r = cli({"app", "--pipeline", "os", "--family", "D", "--m", "1", "--range",
                    "0..4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2*X2 + 2*C(X1,2) + 2*C(Y1,2)") != std::string::npos);
    // byte-identical on re-run
    CHECK(cli({"app", "--pipeline", "os", "--family", "D", "--m", "1", "--range", "0..4"})
              .out == r.out);
}

TEST_CASE("module recovery command") {
    std::string path = write_temp(
        "weylchar_module_test.json",
        R"({"0": {"-|-": "0"},
            "1": {"1|-": "1", "-|1": "-1"},
            "2": {"2|-": "0", "1,1|-": "2", "1|1": "0", "-|2": "0", "-|1,1": "-2"}})");
    CliRun r = cli({"module", "--recover", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"1\"") != std::string::npos);
    CHECK(r.out.find("-|1") != std::string::npos);

    std::string bad = write_temp("weylchar_module_bad.json",
                                 R"({"0": {"-|-": "-1"}})");
    CliRun b = cli({"module", "--recover", bad});
    CHECK(b.code == 1);
    CHECK(b.err.find("NotACharacter") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"irr"}).code == 2);
    CHECK(cli({}).code == 2);
}
