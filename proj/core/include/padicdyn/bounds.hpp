#pragma once

#include "padicdyn/ffdyn.hpp"

#include <vector>

namespace padicdyn {

/// Largest extra exponent j such that p^j can divide the period beyond the
/// m*r part: e - 1 for p > 2 and e for p = 2, where e = v(p) is the
/// ramification index.
long prop2_exponent(long p, long e);

/// The finite set of exact periods possible for points reducing onto a
/// given cycle: {m} when lambda = 0, else {m} union {m*r*p^j : 0 <= j <= E}.
struct AllowedPeriods {
    CycleData cycle;
    std::vector<long> periods; // ascending
};

AllowedPeriods allowed_periods(const CycleData& cycle, long p, long e);

/// Per-prime bound report: every K-rational periodic point has exact period
/// inside the allowed set of the cycle its reduction lies on, hence <= M.
struct BoundReport {
    long p = 0;
    long e = 1;
    long exponent = 0;
    std::vector<AllowedPeriods> cycles;
    long M = 1;
    long preperiodic_count = 0;
    long max_tail = 0;

    /// Union of the allowed sets over all cycles, ascending.
    std::vector<long> allowed_union() const;
};

BoundReport period_bound(const MapP1& f, long p, long e);

/// Intersection of the local allowed unions over several good primes of Q
/// (completions Q_p, so e = 1 at each). Empty intersection means no
/// rational periodic point survives the local constraints; M_global is 0
/// in that case.
struct GlobalReport {
    std::vector<long> primes;
    std::vector<BoundReport> locals;
    std::vector<long> allowed;
    long M_global = 0;
};

GlobalReport global_allowed(const MapP1& f, std::vector<long> primes);

/// True iff deg f >= 2: pulling back O(1) twists by the ample O(d-1), so
/// the periodic points are finite in number over every finitely generated
/// field of characteristic zero. False means "no certificate".
bool finiteness_certificate(const MapP1& f);

} // namespace padicdyn
