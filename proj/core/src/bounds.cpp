#include "padicdyn/bounds.hpp"

#include "padicdyn/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace padicdyn {

long prop2_exponent(long p, long e) {
    if (e < 1) throw std::invalid_argument("prop2_exponent: e >= 1 required");
    return p == 2 ? e : e - 1;
}

AllowedPeriods allowed_periods(const CycleData& cycle, long p, long e) {
    AllowedPeriods out;
    out.cycle = cycle;
    std::set<long> s;
    s.insert(cycle.m);
    if (cycle.lambda != 0) {
        const long E = prop2_exponent(p, e);
        __int128 v = (__int128)cycle.m * *cycle.r;
        for (long j = 0; j <= E; ++j) {
            if (v > (__int128)1 << 62) throw std::overflow_error("allowed_periods: period overflow");
            s.insert(static_cast<long>(v));
            v *= p;
        }
    }
    out.periods.assign(s.begin(), s.end());
    return out;
}

std::vector<long> BoundReport::allowed_union() const {
    std::set<long> u;
    for (const auto& c : cycles) u.insert(c.periods.begin(), c.periods.end());
    return {u.begin(), u.end()};
}

BoundReport period_bound(const MapP1& f, long p, long e) {
    FpMap red = reduce_map(f, p);
    CycleDecomposition dec = enumerate_cycles(red);
    BoundReport out;
    out.p = p;
    out.e = e;
    out.exponent = prop2_exponent(p, e);
    out.preperiodic_count = dec.preperiodic_count;
    out.max_tail = dec.max_tail;
    out.M = 1;
    for (const auto& c : dec.cycles) {
        AllowedPeriods ap = allowed_periods(c, p, e);
        out.M = std::max(out.M, ap.periods.back());
        out.cycles.push_back(std::move(ap));
    }
    return out;
}

GlobalReport global_allowed(const MapP1& f, std::vector<long> primes) {
    if (primes.empty()) throw std::invalid_argument("global_allowed: at least one prime required");
    std::sort(primes.begin(), primes.end());
    if (std::adjacent_find(primes.begin(), primes.end()) != primes.end())
        throw std::invalid_argument("global_allowed: primes must be distinct");
    GlobalReport out;
    out.primes = primes;
    std::set<long> inter;
    bool first = true;
    for (long p : primes) {
        BoundReport local = period_bound(f, p, 1);
        std::vector<long> u = local.allowed_union();
        if (first) {
            inter.insert(u.begin(), u.end());
            first = false;
        } else {
            std::set<long> next;
            for (long n : u)
                if (inter.count(n)) next.insert(n);
            inter.swap(next);
        }
        out.locals.push_back(std::move(local));
    }
    out.allowed.assign(inter.begin(), inter.end());
    out.M_global = out.allowed.empty() ? 0 : out.allowed.back();
    return out;
}

bool finiteness_certificate(const MapP1& f) { return f.degree() >= 2; }

} // namespace padicdyn
