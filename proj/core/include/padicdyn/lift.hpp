#pragma once

#include "padicdyn/bounds.hpp"
#include "padicdyn/localring.hpp"

#include <string>
#include <vector>

namespace padicdyn {

/// n-fold composition f^n, primitive integer coefficients; degree d^n.
/// Throws SizeCapExceededError when d^n exceeds degree_cap.
MapP1 iterate_map(const MapP1& f, long n, long degree_cap = 4096);

/// The binary form F_n*Z - G_n*X whose projective roots are exactly the
/// points of period dividing n. Zero form when f^n is the identity;
/// otherwise primitive of degree d^n + 1 with the first nonzero coefficient
/// positive.
BinForm fixed_point_form(const MapP1& f, long n, long degree_cap = 4096);

/// A normalized point of P^1 over the local ring: (x : 1) with x integral,
/// or (1 : w) with v(w) >= 1 in the chart at infinity.
struct ProjPoint {
    bool infinity_chart = false;
    LocalElem coord;

    /// Deterministic identity at guaranteed precision.
    std::string key() const {
        return (infinity_chart ? "inf:" : "aff:") + coord.digit_string();
    }
};

/// Image of a point under the map, normalized back into a chart.
ProjPoint apply_map_point(const MapP1& f, const ProjPoint& pt);

/// Value of a binary form at a normalized point, in the point's chart.
LocalElem evaluate_form_at_point(const BinForm& form, const ProjPoint& pt);

enum class CertStatus { HenselCertified, PrecisionLimited };

struct PeriodicPointCert {
    ProjPoint point;
    long exact_period = 0;
    CertStatus status = CertStatus::HenselCertified;
    long cycle_index = -1; // into LiftResult::bound.cycles
};

struct LiftOptions {
    long degree_cap = 4096;    // cap on d^n for the dynatomic-style forms
    long max_precision = 4096; // cap on the working precision in pi-units
    bool raise_precision = true;
    bool skip_over_cap = false; // skip allowed periods beyond the cap instead of throwing
};

struct LiftResult {
    BoundReport bound;
    std::vector<PeriodicPointCert> points; // sorted by (period, chart, digits)
    LocalRingPtr ring;                     // effective working ring (possibly raised)
    long requested_precision = 0;
    std::vector<long> skipped_periods;     // allowed periods beyond the degree cap
};

/// Find and certify all periodic points of f over the truncated local ring.
/// Searches each period n in the allowed union, residue class by residue
/// class on the cycles that allow n: Newton/Hensel at simple approximate
/// roots, layered exhaustive lifting through pi-levels otherwise. The exact
/// period of a found point is the least divisor n' of n whose fixed-point
/// form vanishes on it at guaranteed precision.
LiftResult find_periodic_points(const MapP1& f, LocalRingPtr ring, const LiftOptions& opts = {});

/// A point of P^1(Z/p^k): affine (x : 1) with x mod p^k, or (1 : w) with
/// w = p*t, t mod p^(k-1). There are p^k + p^(k-1) points in total.
struct OraclePoint {
    bool inf_chart = false;
    unsigned long v = 0; // x when affine, t when in the infinity chart

    bool operator==(const OraclePoint& o) const { return inf_chart == o.inf_chart && v == o.v; }
    std::string str(long p) const {
        return inf_chart ? "(1:" + std::to_string(static_cast<unsigned long>(p) * v) + ")"
                         : std::to_string(v);
    }
};

struct OracleCycles {
    long p = 0;
    long k = 0;
    unsigned long point_count = 0;
    std::vector<std::vector<OraclePoint>> cycles; // min-first rotation, sorted
    long preperiodic_count = 0;
    long max_tail = 0;
};

/// Brute-force cycle decomposition of P^1(Z/p^k) under f. Finite-precision
/// cycles here may be ghosts (not reductions of any genuine periodic
/// point); their lengths grow with k. Requires good reduction and
/// p^k + p^(k-1) <= size_cap.
OracleCycles oracle_cycles(const MapP1& f, long p, long k, unsigned long size_cap = 1000000);

} // namespace padicdyn
