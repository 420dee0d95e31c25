#include "padicdyn/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

long env_long(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stol(v);
    } catch (...) {
        return fallback;
    }
}

void add_map_options(CLI::App* cmd, padicdyn::RunConfig& cfg) {
    auto* map = cmd->add_option("--map", cfg.map_text, "map as a rational function in x, e.g. \"x^2 - 1\"");
    auto* forms =
        cmd->add_option("--forms", cfg.forms_text,
                        "map as form coefficient lists \"c0,c1,..;d0,d1,..\" (X^i Z^(d-i), ascending i)");
    map->excludes(forms);
    cmd->callback([&cfg, map, forms]() {
        if (map->count() == 0 && forms->count() == 0)
            throw CLI::RequiredError("--map or --forms");
    });
}

} // namespace

int main(int argc, char** argv) {
    padicdyn::RunConfig cfg;
    cfg.max_degree_cap = env_long("PADICDYN_MAX_DEGREE_CAP", cfg.max_degree_cap);
    cfg.max_precision = env_long("PADICDYN_MAX_PRECISION", cfg.max_precision);

    CLI::App app{"periods of self-maps of the projective line over p-adic fields"};
    app.require_subcommand(1);
    std::string format = "json";

    auto add_common = [&](CLI::App* cmd) {
        add_map_options(cmd, cfg);
        cmd->add_option("--format", format, "output format: json or table")
            ->check(CLI::IsMember({"json", "table"}));
        cmd->add_option("--seed", cfg.seed, "seed echoed into the report")
            ->each([&cfg](const std::string&) { cfg.seed_set = true; });
        cmd->add_option("--max-degree-cap", cfg.max_degree_cap, "cap on d^n for iterates");
        cmd->add_option("--max-precision", cfg.max_precision, "cap on the working precision (pi-units)");
    };

    CLI::App* cycles = app.add_subcommand("cycles", "cycle decomposition of the reduced map on P^1(F_p)");
    add_common(cycles);
    cycles->add_option("--prime", cfg.prime, "good prime p")->required();

    CLI::App* bound = app.add_subcommand("bound", "allowed exact periods and the bound M at one prime");
    add_common(bound);
    bound->add_option("--prime", cfg.prime, "good prime p")->required();
    bound->add_option("--ram", cfg.ram, "ramification index e of the local field (default 1)");

    CLI::App* lift = app.add_subcommand("lift", "find and certify periodic points over the local ring");
    add_common(lift);
    lift->add_option("--prime", cfg.prime, "good prime p")->required();
    lift->add_option("--ram", cfg.ram, "ramification index e (default 1)");
    lift->add_option("--eisenstein", cfg.eisenstein, "Eisenstein polynomial, e.g. \"x^2 + 3\" (default x^e - p)");
    lift->add_option("--precision", cfg.precision, "pi-adic working precision N (default 16)");
    lift->add_flag("--no-auto-raise", [&cfg](std::int64_t) { cfg.auto_raise = false; },
                   "keep the requested precision; unresolved points come back precision-limited");

    CLI::App* global = app.add_subcommand("global", "intersect allowed periods over several good primes of Q");
    add_common(global);
    global->add_option("--primes", cfg.primes, "comma-separated good primes, e.g. 2,3")
        ->required()
        ->delimiter(',');

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force cycles of P^1(Z/p^k), ghosts flagged");
    add_common(oracle);
    oracle->add_option("--prime", cfg.prime, "good prime p")->required();
    oracle->add_option("--depth", cfg.depth, "exponent k of the modulus p^k (default 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 3;
    }

    if (cycles->parsed()) cfg.command = padicdyn::Command::Cycles;
    if (bound->parsed()) cfg.command = padicdyn::Command::Bound;
    if (lift->parsed()) cfg.command = padicdyn::Command::Lift;
    if (global->parsed()) cfg.command = padicdyn::Command::Global;
    if (oracle->parsed()) cfg.command = padicdyn::Command::Oracle;
    cfg.table = format == "table";

    try {
        std::cout << padicdyn::run_command(cfg);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return padicdyn::exit_code_for(e);
    }
}
