#pragma once

#include "padicdyn/lift.hpp"
#include "padicdyn/parse.hpp"

#include <string>
#include <vector>

namespace padicdyn {

inline constexpr const char* kVersion = "0.1.0";

enum class Command { Cycles, Bound, Lift, Global, Oracle };

/// One fully specified run of the tool. Exactly one command; primes
/// distinct; N >= 1.
struct RunConfig {
    Command command = Command::Bound;
    std::string map_text;       // affine rational function, or
    std::string forms_text;     // "F;G" coefficient lists (escape hatch)
    long prime = 2;             // cycles | bound | lift | oracle
    std::vector<long> primes;   // global
    long ram = 1;               // ramification index e
    std::string eisenstein;     // defaults to x^e - p when empty
    long precision = 16;        // pi-adic working precision N
    long depth = 2;             // oracle k
    bool table = false;         // JSON unless table output requested
    unsigned long seed = 0;
    bool seed_set = false;
    long max_degree_cap = 4096;
    long max_precision = 4096;
    bool auto_raise = true;
};

/// Execute the command and render the report (byte-stable JSON for fixed
/// inputs and version, or a human-readable table). Throws the library's
/// typed errors; the CLI maps them to exit codes.
std::string run_command(const RunConfig& config);

/// Exit codes: 0 success, 2 bad reduction, 3 parse/usage error,
/// 4 cap exceeded (degree or precision), 1 unexpected internal error.
int exit_code_for(const std::exception& err);

} // namespace padicdyn
