#include "padicdyn/report.hpp"

#include "padicdyn/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace padicdyn {

namespace {

using nlohmann::json;

json cycle_json(const CycleData& c) {
    json j;
    j["m"] = c.m;
    j["lambda"] = c.lambda;
    if (c.r)
        j["r"] = *c.r;
    else
        j["r"] = nullptr;
    json pts = json::array();
    for (const auto& p : c.points) pts.push_back(p.str());
    j["points"] = pts;
    return j;
}

json bound_json(const BoundReport& b) {
    json j;
    j["p"] = b.p;
    j["e"] = b.e;
    j["exponent"] = b.exponent;
    j["M"] = b.M;
    j["preperiodic"] = b.preperiodic_count;
    j["max_tail"] = b.max_tail;
    json cycles = json::array();
    for (const auto& ap : b.cycles) {
        json c = cycle_json(ap.cycle);
        c["allowed"] = ap.periods;
        cycles.push_back(std::move(c));
    }
    j["cycles"] = cycles;
    return j;
}

json point_json(const PeriodicPointCert& cert) {
    json j;
    if (cert.point.infinity_chart)
        j["point"] = {"1", cert.point.coord.digit_string()};
    else
        j["point"] = {cert.point.coord.digit_string(), "1"};
    j["exact_period"] = cert.exact_period;
    j["status"] = cert.status == CertStatus::HenselCertified ? "hensel_certified"
                                                             : "precision_limited";
    j["cycle"] = cert.cycle_index;
    return j;
}

// The cycle of the reduced map that an oracle cycle reduces onto.
std::size_t residue_cycle_of(const BoundReport& b, const OraclePoint& pt, long p) {
    FpPoint fp;
    if (pt.inf_chart)
        fp = FpPoint{true, 0}; // (1 : p t) reduces to infinity
    else
        fp = FpPoint{false, static_cast<long>(pt.v % static_cast<unsigned long>(p))};
    for (std::size_t i = 0; i < b.cycles.size(); ++i)
        for (const auto& q : b.cycles[i].cycle.points)
            if (q == fp) return i;
    throw Error("internal: oracle cycle reduces to a non-periodic residue point");
}

std::string table_cycles(const CycleDecomposition& dec) {
    std::ostringstream os;
    os << "P^1(F_" << dec.p << "): " << dec.p + 1 << " points, " << dec.cycles.size()
       << " cycle(s)\n";
    os << "  #    m  lambda  r     points\n";
    for (std::size_t i = 0; i < dec.cycles.size(); ++i) {
        const CycleData& c = dec.cycles[i];
        os << "  " << i << "    " << c.m << "  " << c.lambda << "       "
           << (c.r ? std::to_string(*c.r) : "-") << "     (";
        for (std::size_t k = 0; k < c.points.size(); ++k) {
            if (k) os << " ";
            os << c.points[k].str();
        }
        os << ")\n";
    }
    os << "preperiodic: " << dec.preperiodic_count << " point(s), longest tail " << dec.max_tail
       << "\n";
    return os.str();
}

std::string table_bound(const BoundReport& b) {
    std::ostringstream os;
    os << "period bound at p=" << b.p << ", e=" << b.e << " (extra p-exponent <= " << b.exponent
       << ")\n";
    os << "  #    m  lambda  r     allowed periods\n";
    for (std::size_t i = 0; i < b.cycles.size(); ++i) {
        const auto& ap = b.cycles[i];
        os << "  " << i << "    " << ap.cycle.m << "  " << ap.cycle.lambda << "       "
           << (ap.cycle.r ? std::to_string(*ap.cycle.r) : "-") << "     {";
        for (std::size_t k = 0; k < ap.periods.size(); ++k) {
            if (k) os << ", ";
            os << ap.periods[k];
        }
        os << "}\n";
    }
    os << "M = " << b.M << "\n";
    return os.str();
}

json params_json(const RunConfig& cfg, const std::string& eis_used) {
    json p;
    switch (cfg.command) {
    case Command::Cycles:
        p["prime"] = cfg.prime;
        break;
    case Command::Bound:
        p["prime"] = cfg.prime;
        p["ram"] = cfg.ram;
        break;
    case Command::Global:
        p["primes"] = cfg.primes;
        break;
    case Command::Lift:
        p["prime"] = cfg.prime;
        p["ram"] = cfg.ram;
        p["eisenstein"] = eis_used;
        p["precision"] = cfg.precision;
        p["max_degree_cap"] = cfg.max_degree_cap;
        p["max_precision"] = cfg.max_precision;
        p["auto_raise"] = cfg.auto_raise;
        break;
    case Command::Oracle:
        p["prime"] = cfg.prime;
        p["depth"] = cfg.depth;
        break;
    }
    if (cfg.seed_set) p["seed"] = cfg.seed;
    return p;
}

const char* command_name(Command c) {
    switch (c) {
    case Command::Cycles: return "cycles";
    case Command::Bound: return "bound";
    case Command::Lift: return "lift";
    case Command::Global: return "global";
    case Command::Oracle: return "oracle";
    }
    return "?";
}

} // namespace

std::string run_command(const RunConfig& cfg) {
    if (cfg.precision < 1) throw std::invalid_argument("precision must be >= 1");
    MapExpr expr = cfg.forms_text.empty() ? parse_map(cfg.map_text) : parse_forms(cfg.forms_text);
    const MapP1& f = expr.map;

    json results;
    std::string table;
    std::string eis_used;

    switch (cfg.command) {
    case Command::Cycles: {
        CycleDecomposition dec = enumerate_cycles(reduce_map(f, cfg.prime));
        json cycles = json::array();
        for (const auto& c : dec.cycles) cycles.push_back(cycle_json(c));
        results["p"] = dec.p;
        results["points"] = dec.p + 1;
        results["cycles"] = cycles;
        results["preperiodic"] = dec.preperiodic_count;
        results["max_tail"] = dec.max_tail;
        if (cfg.table) table = table_cycles(dec);
        break;
    }
    case Command::Bound: {
        BoundReport b = period_bound(f, cfg.prime, cfg.ram);
        results = bound_json(b);
        if (cfg.table) table = table_bound(b);
        break;
    }
    case Command::Global: {
        GlobalReport g = global_allowed(f, cfg.primes);
        results["primes"] = g.primes;
        results["allowed"] = g.allowed;
        results["M_global"] = g.M_global;
        json locals = json::array();
        for (const auto& b : g.locals) locals.push_back(bound_json(b));
        results["locals"] = locals;
        if (cfg.table) {
            std::ostringstream os;
            for (const auto& b : g.locals) os << table_bound(b);
            os << "global allowed periods: {";
            for (std::size_t i = 0; i < g.allowed.size(); ++i) {
                if (i) os << ", ";
                os << g.allowed[i];
            }
            os << "}, M_global = " << g.M_global << "\n";
            table = os.str();
        }
        break;
    }
    case Command::Lift: {
        std::optional<IntPoly> eis;
        if (!cfg.eisenstein.empty()) eis = parse_int_poly(cfg.eisenstein);
        LocalRingPtr ring = LocalRingSpec::make(cfg.prime, cfg.ram, cfg.precision, eis);
        eis_used = print_int_poly(ring->eisenstein);
        LiftOptions opts;
        opts.degree_cap = cfg.max_degree_cap;
        opts.max_precision = cfg.max_precision;
        opts.raise_precision = cfg.auto_raise;
        LiftResult res = find_periodic_points(f, ring, opts);
        results["bound"] = bound_json(res.bound);
        results["precision_requested"] = res.requested_precision;
        results["precision_used"] = res.ring->N;
        results["guaranteed_digits"] = res.ring->guaranteed;
        results["skipped_periods"] = res.skipped_periods;
        json pts = json::array();
        for (const auto& c : res.points) pts.push_back(point_json(c));
        results["points"] = pts;
        if (cfg.table) {
            std::ostringstream os;
            os << "periodic points of " << print_map(f) << " over Z_" << cfg.prime;
            if (cfg.ram > 1) os << "[pi]/(" << eis_used << ")";
            os << ", N = " << res.ring->N << "\n";
            for (const auto& c : res.points) {
                os << "  period " << c.exact_period << "  "
                   << (c.point.infinity_chart ? "(1 : " + c.point.coord.digit_string() + ")"
                                              : "(" + c.point.coord.digit_string() + " : 1)")
                   << "  "
                   << (c.status == CertStatus::HenselCertified ? "hensel-certified"
                                                               : "precision-limited")
                   << "\n";
            }
            if (!res.skipped_periods.empty()) {
                os << "skipped allowed periods beyond degree cap:";
                for (long n : res.skipped_periods) os << " " << n;
                os << "\n";
            }
            table = os.str();
        }
        break;
    }
    case Command::Oracle: {
        OracleCycles oc = oracle_cycles(f, cfg.prime, cfg.depth);
        BoundReport b = period_bound(f, cfg.prime, 1);
        results["p"] = oc.p;
        results["k"] = oc.k;
        results["points"] = oc.point_count;
        results["preperiodic"] = oc.preperiodic_count;
        results["max_tail"] = oc.max_tail;
        json cycles = json::array();
        for (const auto& cyc : oc.cycles) {
            json c;
            c["length"] = cyc.size();
            json pts = json::array();
            for (const auto& pt : cyc) pts.push_back(pt.str(oc.p));
            c["points"] = pts;
            std::size_t rc = residue_cycle_of(b, cyc.front(), oc.p);
            c["reduces_to_cycle"] = rc;
            const auto& allowed = b.cycles[rc].periods;
            bool liftable = std::binary_search(allowed.begin(), allowed.end(),
                                               static_cast<long>(cyc.size()));
            c["ghost_candidate"] = !liftable;
            cycles.push_back(std::move(c));
        }
        results["cycles"] = cycles;
        if (cfg.table) {
            std::ostringstream os;
            os << "P^1(Z/" << cfg.prime << "^" << cfg.depth << "): " << oc.point_count
               << " points, " << oc.cycles.size() << " cycle(s)\n";
            for (const auto& c : results["cycles"]) {
                os << "  length " << c["length"] << "  [";
                bool firstpt = true;
                for (const auto& pt : c["points"]) {
                    if (!firstpt) os << " ";
                    firstpt = false;
                    os << pt.get<std::string>();
                }
                os << "]";
                if (c["ghost_candidate"].get<bool>()) os << "  <- not liftable / ghost-candidate";
                os << "\n";
            }
            table = os.str();
        }
        break;
    }
    }

    if (cfg.table) return table;

    json out;
    out["command"] = command_name(cfg.command);
    out["map"] = print_map(f);
    out["params"] = params_json(cfg, eis_used);
    out["results"] = results;
    out["warnings"] = expr.warnings;
    out["version"] = kVersion;
    return out.dump(2) + "\n";
}

int exit_code_for(const std::exception& err) {
    if (dynamic_cast<const BadReductionError*>(&err)) return 2;
    if (dynamic_cast<const SizeCapExceededError*>(&err)) return 4;
    if (dynamic_cast<const PrecisionTooLowError*>(&err)) return 4;
    if (dynamic_cast<const ParseError*>(&err)) return 3;
    if (dynamic_cast<const DegreeZeroError*>(&err)) return 3;
    if (dynamic_cast<const NotAMorphismError*>(&err)) return 3;
    if (dynamic_cast<const std::invalid_argument*>(&err)) return 3;
    return 1;
}

} // namespace padicdyn
