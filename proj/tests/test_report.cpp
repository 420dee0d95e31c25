#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padicdyn/errors.hpp"
#include "padicdyn/report.hpp"

#include <fstream>
#include <sstream>

using namespace padicdyn;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunConfig bound_x2_p3() {
    RunConfig cfg;
    cfg.command = Command::Bound;
    cfg.map_text = "x^2";
    cfg.prime = 3;
    return cfg;
}

RunConfig global_x2m1_p23() {
    RunConfig cfg;
    cfg.command = Command::Global;
    cfg.map_text = "x^2-1";
    cfg.primes = {2, 3};
    return cfg;
}

RunConfig lift_x2_ram2() {
    RunConfig cfg;
    cfg.command = Command::Lift;
    cfg.map_text = "x^2";
    cfg.prime = 3;
    cfg.ram = 2;
    cfg.eisenstein = "x^2+3";
    cfg.precision = 8;
    return cfg;
}

} // namespace

TEST_CASE("JSON output is byte-stable across runs") {
    for (const RunConfig& cfg : {bound_x2_p3(), global_x2m1_p23(), lift_x2_ram2()}) {
        std::string a = run_command(cfg);
        std::string b = run_command(cfg);
        CHECK(a == b);
    }
}

TEST_CASE("golden JSON: bound x^2 at p=3") {
    CHECK(run_command(bound_x2_p3()) == read_file(std::string(PADICDYN_GOLDEN_DIR) +
                                                  "/bound_x2_p3.json"));
}

TEST_CASE("golden JSON: global x^2-1 at primes 2,3") {
    CHECK(run_command(global_x2m1_p23()) == read_file(std::string(PADICDYN_GOLDEN_DIR) +
                                                      "/global_x2m1_p23.json"));
}

TEST_CASE("golden JSON: lift x^2 over the ramified cubic-root ring") {
    CHECK(run_command(lift_x2_ram2()) == read_file(std::string(PADICDYN_GOLDEN_DIR) +
                                                   "/lift_x2_ram2.json"));
}

TEST_CASE("table mode renders without error") {
    for (RunConfig cfg : {bound_x2_p3(), global_x2m1_p23(), lift_x2_ram2()}) {
        cfg.table = true;
        CHECK(!run_command(cfg).empty());
    }
}

TEST_CASE("oracle report flags the stretched ghost at depth 3") {
    RunConfig cfg;
    cfg.command = Command::Oracle;
    cfg.map_text = "x^2";
    cfg.prime = 3;
    cfg.depth = 3;
    std::string out = run_command(cfg);
    CHECK(out.find("\"ghost_candidate\": true") != std::string::npos);
    cfg.depth = 2;
    std::string out2 = run_command(cfg);
    // At depth 2 the {4, 7} cycle has length 2, inside the allowed set.
    CHECK(out2.find("\"ghost_candidate\": true") == std::string::npos);
}

TEST_CASE("run_command propagates typed errors and exit codes") {
    RunConfig cfg = bound_x2_p3();
    cfg.map_text = "x^2/3";
    try {
        run_command(cfg);
        FAIL("expected bad reduction");
    } catch (const BadReductionError& e) {
        CHECK(exit_code_for(e) == 2);
    }
    cfg.map_text = "x^^";
    try {
        run_command(cfg);
        FAIL("expected parse error");
    } catch (const ParseError& e) {
        CHECK(exit_code_for(e) == 3);
    }
    RunConfig lift = lift_x2_ram2();
    lift.max_degree_cap = 4;
    try {
        run_command(lift);
        FAIL("expected size cap");
    } catch (const SizeCapExceededError& e) {
        CHECK(exit_code_for(e) == 4);
    }
}
