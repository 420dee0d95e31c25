#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// End-to-end checks of the installed command-line surface: spawns the real
// binary and inspects exit codes and stdout.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(PADICDYN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace

TEST_CASE("exit 0 with JSON on success") {
    RunResult r = run_cli("bound --map \"x^2\" --prime 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"M\": 2") != std::string::npos);
    CHECK(r.out.find("\"version\": \"0.1.0\"") != std::string::npos);
}

TEST_CASE("exit 2 on bad reduction, naming the prime") {
    CHECK(run_cli("bound --map \"x^2/3\" --prime 3").exit_code == 2);
    CHECK(run_cli("global --map \"x^2/3\" --primes 2,3").exit_code == 2);
}

TEST_CASE("exit 3 on parse and usage errors") {
    CHECK(run_cli("bound --map \"x^+\" --prime 3").exit_code == 3);
    CHECK(run_cli("bound --map \"7\" --prime 3").exit_code == 3);
    CHECK(run_cli("bound --map \"x^2\"").exit_code == 3);       // missing --prime
    CHECK(run_cli("bound --prime 3").exit_code == 3);           // missing --map
    CHECK(run_cli("global --map \"x^2\" --primes 3,3").exit_code == 3);
}

TEST_CASE("exit 4 when a cap is exceeded") {
    CHECK(run_cli("lift --map \"x^2\" --prime 3 --ram 2 --eisenstein \"x^2+3\" "
                  "--precision 8 --max-degree-cap 4")
              .exit_code == 4);
    CHECK(run_cli("oracle --map \"x^2\" --prime 2 --depth 40").exit_code == 4);
}

TEST_CASE("the five commands all run on a common example") {
    CHECK(run_cli("cycles --map \"x^2-1\" --prime 5").exit_code == 0);
    CHECK(run_cli("bound --map \"x^2-1\" --prime 5").exit_code == 0);
    CHECK(run_cli("lift --map \"x^2-1\" --prime 5 --precision 6").exit_code == 0);
    CHECK(run_cli("global --map \"x^2-1\" --primes 2,3,5").exit_code == 0);
    CHECK(run_cli("oracle --map \"x^2-1\" --prime 5 --depth 2").exit_code == 0);
}

TEST_CASE("forms escape hatch and table format work end to end") {
    RunResult forms = run_cli("bound --forms \"-1,0,1;1,0,0\" --prime 3");
    CHECK(forms.exit_code == 0);
    RunResult table = run_cli("cycles --map \"x^2\" --prime 3 --format table");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("P^1(F_3)") != std::string::npos);
}

TEST_CASE("environment variable overrides the degree cap") {
    std::string cmd = std::string("PADICDYN_MAX_DEGREE_CAP=4 ") + PADICDYN_CLI_PATH +
                      " lift --map \"x^2\" --prime 3 --ram 2 --eisenstein \"x^2+3\""
                      " --precision 8 2>/dev/null";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 4);
}
