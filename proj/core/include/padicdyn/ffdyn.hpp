#pragma once

#include "padicdyn/map_p1.hpp"

#include <optional>
#include <string>
#include <vector>

namespace padicdyn {

/// A point of P^1(F_p): affine (a : 1) or infinity (1 : 0).
struct FpPoint {
    bool inf = false;
    long a = 0;

    bool operator==(const FpPoint& o) const { return inf == o.inf && a == o.a; }
    bool operator<(const FpPoint& o) const {
        if (inf != o.inf) return !inf; // affine points sort before infinity
        return a < o.a;
    }
    std::string str() const { return inf ? "inf" : std::to_string(a); }
};

/// The reduction of a MapP1 modulo a good prime, with the four chart
/// polynomials cached: A(x) = F(x,1), B(x) = G(x,1) and their reversals
/// At(w) = F(1,w), Bt(w) = G(1,w) for the chart at infinity.
struct FpMap {
    long p = 0;
    long d = 0;
    std::vector<long> fc, gc; // form coefficients mod p, index i = X^i Z^(d-i)

    FpPoint apply(const FpPoint& pt) const;
};

/// Coefficient-wise reduction; throws BadReductionError when p | res(F, G).
FpMap reduce_map(const MapP1& f, long p);

/// One cycle of the reduced map: ordered points (map sends points[i] to
/// points[i+1 mod m]), length m, multiplier lambda, and the multiplicative
/// order r of lambda when lambda != 0.
struct CycleData {
    std::vector<FpPoint> points;
    long m = 0;
    long lambda = 0;
    std::optional<long> r;
};

struct CycleDecomposition {
    long p = 0;
    std::vector<CycleData> cycles;
    long preperiodic_count = 0;
    long max_tail = 0;
};

/// Full functional-graph decomposition of P^1(F_p) under the reduced map.
/// Cycles are rotated to start at their smallest point and sorted.
CycleDecomposition enumerate_cycles(const FpMap& f);

/// Product of the local derivative of f along the cycle, computed in the
/// affine chart at affine points and the w = 1/x chart at infinity.
long cycle_multiplier(const FpMap& f, const std::vector<FpPoint>& cycle);

/// Least r >= 1 with lambda^r = 1 in F_p^*; divides p - 1.
long mult_order(long lambda, long p);

namespace detail {

/// Generic functional-graph decomposition over indices [0, next.size()).
struct FuncGraph {
    std::vector<std::vector<std::size_t>> cycles; // rotated min-first, sorted
    std::vector<bool> on_cycle;
    long preperiodic_count = 0;
    long max_tail = 0;
};
FuncGraph decompose_functional_graph(const std::vector<std::size_t>& next);

} // namespace detail

} // namespace padicdyn
