#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout only
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("TFORGE_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "TFORGE_CLI must point at the tableau-forge binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace

TEST_CASE("count: engines and agreement") {
    auto r = run_cli("count --skew 2,2/1 --method oracle,naruse");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2\n");

    r = run_cli("count --family rho --params 1,1,1,1,1 --method formula,oracle");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "16\n");

    r = run_cli("count --skew 1/ --method oracle");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n");

    r = run_cli("count --family v --params 2,1,1,2 --method formula,oracle,naruse");
    CHECK(r.exit_code == 2); // naruse needs an unshifted shape
}

TEST_CASE("gf: series text output") {
    auto r = run_cli("gf --skew 1/ --kind rpp --trunc 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 + q + q^2 + q^3 (+O(q^4))\n");

    r = run_cli("gf --family m --params 1,1,0,1,0,1 --kind ssyt --bounded 1 --engine formula");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "q + q^2\n");

    r = run_cli("gf --family m --params 1,0,0,0,0,1 --trace --trunc 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 + x q + x^2 q^2 (+O(q^3))\n");
}

TEST_CASE("excited listing and counting") {
    auto r = run_cli("excited --skew 2,2/1 --count");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2\n");

    r = run_cli("excited --skew 2,1/1 --list");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "(1,1)\n");

    r = run_cli("excited --skew 3,2/ --count");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n");
}

TEST_CASE("exit codes") {
    CHECK(run_cli("count --skew not-a-shape --method oracle").exit_code == 2);
    CHECK(run_cli("count --skew 2,2/1 --method warp").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    // cell cap trips exit 3
    CHECK(run_cli("--cap 3 count --skew 3,2/ --method oracle").exit_code == 3);
    // env var override has the same effect
    {
        const char* bin = std::getenv("TFORGE_CLI");
        REQUIRE(bin != nullptr);
        std::string cmd = std::string("TABLEAU_FORGE_CAP=3 ") + bin +
                          " count --skew 3,2/ --method oracle 2>/dev/null";
        int status = std::system(cmd.c_str());
        CHECK(WEXITSTATUS(status) == 3);
    }
}

TEST_CASE("verify subcommand and report") {
    auto r = run_cli("verify --theorem macmahon --range a=0..2 --range b=0..2 --range c=0..2 "
                     "--out cli_report.jsonl");
    CHECK(r.exit_code == 0);
    std::ifstream in("cli_report.jsonl");
    REQUIRE(in.good());
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        CHECK(line.find("\"status\":\"pass\"") != std::string::npos);
    }
    CHECK(lines == 27);
    std::remove("cli_report.jsonl");

    r = run_cli("verify --theorem thm6.1 --range n=1 --range a=0..1 --range b=0..1 "
                "--range c=0..1 --range d=0..1 --range m=1..2 --trunc 6 --jobs 2");
    CHECK(r.exit_code == 0);

    r = run_cli("verify --theorem unknown-id --range a=0..1");
    CHECK(r.exit_code == 2);
}
