// Exit-code contract and report determinism for the command-line tool.
// The path to the built binary is passed as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_cli_path;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.output.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_CASE("exit codes: pass = 0, check failure = 1, invalid config = 2") {
    CHECK(run_cli("verify --n 10 --qprec 8 --checks realization").exit_code == 0);
    // injected failing check
    auto fail = run_cli("verify --n 10 --qprec 8 --checks selftest-fail");
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("\"status\": \"fail\"") != std::string::npos); // report still written
    CHECK(run_cli("verify --n 5 --qprec 8").exit_code == 2);
    CHECK(run_cli("verify --qprec 8").exit_code == 2);      // missing --n
    CHECK(run_cli("frobnicate").exit_code == 2);            // unknown subcommand
    CHECK(run_cli("cusp --n 10 --a 2").exit_code == 2);     // NotAUnit
}

TEST_CASE("reports are byte-identical across runs") {
    const std::string args = "verify --n 10 --qprec 8 --checks realization,collinearity";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK_FALSE(a.output.empty());
    // and across thread counts
    auto c = run_cli(args + " --threads 1");
    auto d = run_cli(args + " --threads 4");
    CHECK(c.output == d.output);
    CHECK(a.output == c.output);
}

TEST_CASE("report file is written atomically at --out") {
    std::string path = "cli_report_test.json";
    std::remove(path.c_str());
    auto r = run_cli("cusp --n 12 --a 5 --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("\"is_realization\": true") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("csv format flattens check items") {
    auto r = run_cli("verify --n 10 --qprec 8 --checks realization --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("check,item,passed\n", 0) == 0);
    CHECK(r.output.find("realization,cusp_config(10,1),1") != std::string::npos);
}

TEST_CASE("qseries and chain emit exact strings") {
    auto r = run_cli("qseries --n 10 --a 1 --qprec 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"sigma\"") != std::string::npos);
    auto c = run_cli("chain --s 2 --t 5 --range -4..8");
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("\"node_residual\"") != std::string::npos);
    // all cubic residuals are the exact string "0"
    CHECK(c.output.find("\"cubic_residuals\"") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-cli-binary>\n");
        return 1;
    }
    g_cli_path = argv[1];
    doctest::Context ctx;
    return ctx.run();
}
