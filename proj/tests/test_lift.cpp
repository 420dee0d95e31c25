#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padicdyn/errors.hpp"
#include "padicdyn/lift.hpp"
#include "test_util.hpp"

#include <random>
#include <set>

using namespace padicdyn;

namespace {

MapP1 squaring() { return MapP1(BinForm{0, 0, 1}, BinForm{1, 0, 0}); }
MapP1 x2_minus_1() { return MapP1(BinForm{-1, 0, 1}, BinForm{1, 0, 0}); }

// Does a - b vanish to at least `digits` pi-units?
bool agree_to(const LocalElem& a, const LocalElem& b, long digits) {
    auto v = (a - b).valuation();
    return !v || *v >= digits;
}

const PeriodicPointCert* find_cert(const LiftResult& res, bool inf, const LocalElem& coord,
                                   long digits) {
    for (const auto& c : res.points)
        if (c.point.infinity_chart == inf && agree_to(c.point.coord, coord, digits)) return &c;
    return nullptr;
}

} // namespace

TEST_CASE("iterate frozen cases") {
    MapP1 sq = squaring();
    MapP1 sq2 = iterate_map(sq, 2);
    CHECK(sq2.numerator() == BinForm{0, 0, 0, 0, 1});
    CHECK(sq2.denominator() == BinForm{1, 0, 0, 0, 0});

    MapP1 f2 = iterate_map(x2_minus_1(), 2);
    CHECK(f2.numerator() == BinForm{0, 0, -2, 0, 1}); // X^4 - 2 X^2 Z^2
    CHECK(f2.denominator() == BinForm{1, 0, 0, 0, 0});

    CHECK(iterate_map(x2_minus_1(), 1) == x2_minus_1());
    CHECK_THROWS_AS(iterate_map(squaring(), 13), SizeCapExceededError);
}

TEST_CASE("fixed point form frozen cases") {
    BinForm phi1 = fixed_point_form(squaring(), 1);
    // X^2 Z - X Z^2 up to the canonical sign; roots are 0, 1, infinity.
    CHECK(phi1.degree() == 3);
    IntPoly chart = phi1.dehomogenize_x();
    CHECK(IntPoly::gcd(chart, IntPoly{0, -1, 1}).degree() == 2); // x(x-1) divides
    CHECK(chart.eval(BigInt(0)) == 0);
    CHECK(chart.eval(BigInt(1)) == 0);

    BinForm phi2 = fixed_point_form(squaring(), 2);
    CHECK(phi2.degree() == 5);
    CHECK(phi2.dehomogenize_x().eval(BigInt(1)) == 0);

    MapP1 ident(BinForm{0, 1}, BinForm{1, 0});
    CHECK(fixed_point_form(ident, 1).is_zero());
}

TEST_CASE("squaring map over Z_3: exactly the three rational fixed points") {
    auto ring = LocalRingSpec::make(3, 1, 8);
    LiftResult res = find_periodic_points(squaring(), ring);
    REQUIRE(res.points.size() == 3);
    for (const auto& c : res.points) {
        CHECK(c.exact_period == 1);
        CHECK(c.status == CertStatus::HenselCertified);
    }
    CHECK(find_cert(res, false, LocalElem::zero(res.ring), 8) != nullptr);
    CHECK(find_cert(res, false, LocalElem::one(res.ring), 8) != nullptr);
    CHECK(find_cert(res, true, LocalElem::zero(res.ring), 8) != nullptr);
}

TEST_CASE("x^2 - 1 over Z_2: the 2-cycle {0, -1} and fixed infinity") {
    auto ring = LocalRingSpec::make(2, 1, 10);
    LiftResult res = find_periodic_points(x2_minus_1(), ring);
    REQUIRE(res.points.size() == 3);
    const auto* inf = find_cert(res, true, LocalElem::zero(res.ring), 10);
    REQUIRE(inf != nullptr);
    CHECK(inf->exact_period == 1);
    const auto* zero = find_cert(res, false, LocalElem::zero(res.ring), 10);
    REQUIRE(zero != nullptr);
    CHECK(zero->exact_period == 2);
    const auto* minus1 = find_cert(res, false, LocalElem::from_integer(res.ring, BigInt(-1)), 10);
    REQUIRE(minus1 != nullptr);
    CHECK(minus1->exact_period == 2);
    // No rational fixed point off infinity: the affine fixed-point
    // discriminant is 5, and 5 is not a square in Z_2 (5 mod 8 != 1).
    for (const auto& c : res.points)
        if (c.exact_period == 1) CHECK(c.point.infinity_chart);
    CHECK(5 % 8 != 1);
    // The 2-cycle is genuinely rational: f(0) = -1, f(-1) = 0.
    auto [u0, v0] = x2_minus_1().apply_raw(BigInt(0), BigInt(1));
    CHECK(u0 == -v0);
    auto [u1, v1] = x2_minus_1().apply_raw(BigInt(-1), BigInt(1));
    CHECK(u1 == 0);
}

TEST_CASE("squaring map over Z_3[pi]/(pi^2+3): cube roots of unity appear") {
    auto ring = LocalRingSpec::make(3, 2, 8, IntPoly{3, 0, 1});
    LiftResult res = find_periodic_points(squaring(), ring);
    REQUIRE(res.points.size() == 5);
    long period2 = 0;
    for (const auto& c : res.points) {
        CHECK(c.status == CertStatus::HenselCertified);
        if (c.exact_period == 2) ++period2;
    }
    CHECK(period2 == 2);
    // The period-2 points are (-1 +- pi)/2, the roots of x^2 + x + 1.
    const auto& R = res.ring;
    LocalElem half = LocalElem::from_rational(R, BigInt(1), BigInt(2));
    LocalElem pi = LocalElem::uniformizer(R);
    LocalElem omega = (pi - LocalElem::one(R)) * half;
    LocalElem omega_bar = (-pi - LocalElem::one(R)) * half;
    long digits = R->guaranteed - 1; // roots carry v(S') = 1
    CHECK(find_cert(res, false, omega, digits) != nullptr);
    CHECK(find_cert(res, false, omega_bar, digits) != nullptr);
    // 2 sits in the allowed set {1, 2, 6} of the fixed point 1.
    for (const auto& ap : res.bound.cycles)
        if (ap.cycle.points == std::vector<FpPoint>{FpPoint{false, 1}})
            CHECK(ap.periods == std::vector<long>{1, 2, 6});
}

TEST_CASE("certification re-check: f^n fixes each point, no proper divisor does") {
    struct Scenario {
        MapP1 f;
        LocalRingPtr ring;
    };
    std::vector<Scenario> scenarios;
    scenarios.push_back({squaring(), LocalRingSpec::make(3, 1, 8)});
    scenarios.push_back({x2_minus_1(), LocalRingSpec::make(2, 1, 10)});
    scenarios.push_back({squaring(), LocalRingSpec::make(3, 2, 8, IntPoly{3, 0, 1})});
    for (const auto& [f, ring] : scenarios) {
        LiftResult res = find_periodic_points(f, ring);
        for (const auto& c : res.points) {
            ProjPoint q = c.point;
            for (long i = 0; i < c.exact_period; ++i) q = apply_map_point(f, q);
            CHECK(q.infinity_chart == c.point.infinity_chart);
            CHECK(agree_to(q.coord, c.point.coord, res.ring->guaranteed - 2));
            for (long div : divisors(c.exact_period)) {
                if (div == c.exact_period) continue;
                ProjPoint q2 = c.point;
                for (long i = 0; i < div; ++i) q2 = apply_map_point(f, q2);
                bool moved = q2.infinity_chart != c.point.infinity_chart ||
                             !(q2.coord - c.point.coord).is_zero_at_precision();
                CHECK(moved);
            }
        }
    }
}

TEST_CASE("oracle cycles frozen cases") {
    OracleCycles oc = oracle_cycles(squaring(), 3, 2);
    CHECK(oc.point_count == 12);
    std::set<std::vector<unsigned long>> lengths;
    bool ghost_found = false;
    for (const auto& cyc : oc.cycles) {
        if (cyc.size() == 2) {
            std::set<unsigned long> pts;
            for (const auto& pt : cyc) {
                CHECK_FALSE(pt.inf_chart);
                pts.insert(pt.v);
            }
            CHECK(pts == std::set<unsigned long>{4, 7});
            ghost_found = true;
        }
    }
    CHECK(ghost_found);

    OracleCycles oc3 = oracle_cycles(squaring(), 3, 3);
    bool stretched = false;
    for (const auto& cyc : oc3.cycles)
        for (const auto& pt : cyc)
            if (!pt.inf_chart && pt.v == 4) {
                CHECK(cyc.size() == 6);
                stretched = true;
            }
    CHECK(stretched);

    MapP1 ident(BinForm{0, 1}, BinForm{1, 0});
    OracleCycles oci = oracle_cycles(ident, 2, 1);
    CHECK(oci.point_count == 3);
    CHECK(oci.cycles.size() == 3);

    CHECK_THROWS_AS(oracle_cycles(squaring(), 2, 25), SizeCapExceededError);
    MapP1 bad(BinForm{0, 0, 1}, BinForm{3, 0, 0});
    CHECK_THROWS_AS(oracle_cycles(bad, 3, 2), BadReductionError);
}

TEST_CASE("no certificate reduces into the mod-9 ghost cycle {4, 7}") {
    auto ring = LocalRingSpec::make(3, 1, 8);
    LiftResult res = find_periodic_points(squaring(), ring);
    for (const auto& c : res.points) {
        if (c.point.infinity_chart) continue;
        BigInt x9 = c.point.coord.coeffs()[0] % 9;
        CHECK(x9 != 4);
        CHECK(x9 != 7);
    }
}

TEST_CASE("reduction containment: certified points land on oracle cycles") {
    struct Scenario {
        MapP1 f;
        LocalRingPtr ring;
    };
    std::vector<Scenario> scenarios;
    scenarios.push_back({squaring(), LocalRingSpec::make(3, 1, 8)});
    scenarios.push_back({x2_minus_1(), LocalRingSpec::make(2, 1, 10)});
    for (const auto& [f, ring] : scenarios) {
        LiftResult res = find_periodic_points(f, ring);
        for (long k = 1; k <= std::min<long>(res.ring->M, 8); ++k) {
            OracleCycles oc = oracle_cycles(f, ring->p, k);
            BigInt pk = pow_int(BigInt(ring->p), static_cast<unsigned long>(k));
            for (const auto& c : res.points) {
                OraclePoint target;
                if (c.point.infinity_chart) {
                    BigInt w = c.point.coord.coeffs()[0] % pk;
                    target = OraclePoint{true, BigInt(w / ring->p).get_ui()};
                } else {
                    target = OraclePoint{false, BigInt(c.point.coord.coeffs()[0] % pk).get_ui()};
                }
                bool on_cycle = false;
                for (const auto& cyc : oc.cycles)
                    for (const auto& pt : cyc)
                        if (pt == target) {
                            on_cycle = true;
                            CHECK(c.exact_period % static_cast<long>(cyc.size()) == 0);
                        }
                CHECK(on_cycle);
            }
        }
    }
}

TEST_CASE("degree accounting and root containment") {
    MapP1 f = x2_minus_1();
    for (long n : {1L, 2L, 3L}) {
        BinForm phi = fixed_point_form(f, n);
        CHECK(phi.degree() == pow_int(BigInt(2), static_cast<unsigned long>(n)) + 1);
    }
    // Phi_1 divides Phi_2 exactly up to content when squarefree.
    for (const MapP1& g : {x2_minus_1(), squaring()}) {
        IntPoly c1 = fixed_point_form(g, 1).dehomogenize_x().primitive_part();
        IntPoly c2 = fixed_point_form(g, 2).dehomogenize_x().primitive_part();
        if (discriminant(c1) != 0) CHECK_NOTHROW(IntPoly::divide_exact(c2, c1));
    }
    // Certified period-m points are roots of Phi_n for every m | n.
    auto ring = LocalRingSpec::make(3, 2, 8, IntPoly{3, 0, 1});
    LiftResult res = find_periodic_points(squaring(), ring);
    BinForm phi2 = fixed_point_form(squaring(), 2);
    long count_div2 = 0;
    for (const auto& c : res.points) {
        if (2 % c.exact_period != 0) continue;
        ++count_div2;
        CHECK(evaluate_form_at_point(phi2, c.point).is_zero_at_precision());
    }
    IntPoly s2 = squarefree_part(fixed_point_form(squaring(), 2).dehomogenize_x());
    long distinct_roots = s2.degree() + 1; // + infinity, a root of Phi_2 here
    CHECK(count_div2 <= distinct_roots);
}

TEST_CASE("identity iterates are rejected with a clear error") {
    MapP1 minus_x(BinForm{0, -1}, BinForm{1, 0}); // x -> -x, an involution
    auto ring = LocalRingSpec::make(3, 1, 6);
    CHECK_THROWS_AS(find_periodic_points(minus_x, ring), IdentityIterateError);
}

TEST_CASE("precision-limited mode and the too-low error") {
    // Fixed points 3 and -3 of x^2 + x - 9 collide modulo 3: undecidable
    // at N = 2 without raising.
    MapP1 f(BinForm{-9, 1, 1}, BinForm{1, 0, 0});
    auto low = LocalRingSpec::make(3, 1, 2);
    LiftOptions no_raise;
    no_raise.raise_precision = false;
    LiftResult limited = find_periodic_points(f, low, no_raise);
    REQUIRE(!limited.points.empty());
    bool saw_limited = false;
    for (const auto& c : limited.points)
        if (c.status == CertStatus::PrecisionLimited) saw_limited = true;
    CHECK(saw_limited);

    LiftOptions capped;
    capped.max_precision = 3;
    CHECK_THROWS_AS(find_periodic_points(f, low, capped), PrecisionTooLowError);

    // With room to raise, both fixed points certify.
    LiftResult full = find_periodic_points(f, low);
    CHECK(full.ring->N > 2);
    long hensel = 0;
    for (const auto& c : full.points)
        if (c.status == CertStatus::HenselCertified && !c.point.infinity_chart) ++hensel;
    CHECK(hensel == 2);
    CHECK(find_cert(full, false, LocalElem::from_integer(full.ring, BigInt(3)),
                    full.ring->guaranteed - 2) != nullptr);
    CHECK(find_cert(full, false, LocalElem::from_integer(full.ring, BigInt(-3)),
                    full.ring->guaranteed - 2) != nullptr);
}

TEST_CASE("degree cap: skip versus strict") {
    auto ring = LocalRingSpec::make(3, 2, 8, IntPoly{3, 0, 1});
    LiftOptions strict;
    strict.degree_cap = 4; // allowed periods {1, 2, 6} need up to 2^6
    CHECK_THROWS_AS(find_periodic_points(squaring(), ring, strict), SizeCapExceededError);
    LiftOptions skip = strict;
    skip.skip_over_cap = true;
    LiftResult res = find_periodic_points(squaring(), ring, skip);
    CHECK(res.skipped_periods == std::vector<long>{6});
    CHECK(res.points.size() == 5); // the period-2 search still completes
}

TEST_CASE("soundness on random maps: certified periods lie in allowed sets") {
    std::mt19937_64 rng(51);
    int maps_done = 0;
    for (int trial = 0; maps_done < 40 && trial < 200; ++trial) {
        long degree = 2 + static_cast<long>(rng() % 2);
        MapP1 f = testutil::random_good_map(rng, degree, {2, 3, 5, 7});
        ++maps_done;
        for (long p : {2L, 3L, 5L, 7L}) {
            auto ring = LocalRingSpec::make(p, 1, 12);
            LiftOptions opts;
            opts.degree_cap = 512;
            opts.skip_over_cap = true;
            LiftResult res;
            try {
                res = find_periodic_points(f, ring, opts);
            } catch (const IdentityIterateError&) {
                continue;
            }
            for (const auto& c : res.points) {
                const AllowedPeriods& ap = res.bound.cycles[static_cast<std::size_t>(c.cycle_index)];
                CHECK(std::binary_search(ap.periods.begin(), ap.periods.end(), c.exact_period));
                CHECK(c.exact_period % ap.cycle.m == 0);
                if (c.status != CertStatus::HenselCertified) continue;
                // The effective content of the p-power clause at e = 1, p > 2:
                // no extra factor of p beyond m or m*r.
                if (p > 2) {
                    bool plain = c.exact_period == ap.cycle.m;
                    bool with_r = ap.cycle.r && c.exact_period == ap.cycle.m * *ap.cycle.r;
                    CHECK((plain || with_r));
                }
            }
        }
    }
    CHECK(maps_done == 40);
}
