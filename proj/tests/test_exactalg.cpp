#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padicdyn/binform.hpp"
#include "padicdyn/intpoly.hpp"
#include "test_util.hpp"

#include <random>

using namespace padicdyn;

TEST_CASE("form resultant matches frozen small cases") {
    BinForm x2{0, 0, 1}; // X^2
    BinForm z2{1, 0, 0}; // Z^2
    BinForm z2x3{3, 0, 0};
    CHECK(resultant(x2, z2) == 1);
    CHECK(resultant(x2, z2x3) == 9);
    CHECK(resultant(x2, x2) == 0);
}

TEST_CASE("form resultant: swap sign and scaling laws") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        long d = 1 + static_cast<long>(rng() % 3);
        long e = 1 + static_cast<long>(rng() % 3);
        BinForm f = testutil::random_form(rng, d);
        BinForm g = testutil::random_form(rng, e);
        BigInt r = resultant(f, g);
        BigInt swapped = resultant(g, f);
        CHECK(swapped == ((d * e) % 2 == 0 ? r : -r));
        BigInt c(3);
        CHECK(resultant(f, g * c) == pow_int(c, static_cast<unsigned long>(d)) * r);
    }
}

TEST_CASE("form resultant against cofactor-expansion Sylvester oracle") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        long d = 1 + static_cast<long>(rng() % 3);
        long e = 1 + static_cast<long>(rng() % 3);
        BinForm f = testutil::random_form(rng, d);
        BinForm g = testutil::random_form(rng, e);
        CHECK(resultant(f, g) == testutil::det_cofactor(testutil::sylvester(f, g)));
    }
}

TEST_CASE("resultant vanishing mod p matches shared roots over closures of F_p") {
    std::mt19937_64 rng(13);
    const long primes[] = {2, 3, 5, 7, 11, 13};
    for (int trial = 0; trial < 30; ++trial) {
        long d = 1 + static_cast<long>(rng() % 3);
        long e = 1 + static_cast<long>(rng() % 3);
        BinForm f = testutil::random_form(rng, d, 6);
        BinForm g = testutil::random_form(rng, e, 6);
        if (f.is_zero() || g.is_zero()) continue;
        // Skip pairs whose reduction mod p drops to the zero form.
        BigInt r = resultant(f, g);
        for (long p : primes) {
            bool fzero = true, gzero = true;
            for (long c : f.reduce_mod(p))
                if (c) fzero = false;
            for (long c : g.reduce_mod(p))
                if (c) gzero = false;
            if (fzero || gzero) continue;
            bool res_vanishes = mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(p));
            CHECK(res_vanishes == testutil::share_root_mod_p(f, g, p));
        }
    }
}

TEST_CASE("discriminant frozen cases") {
    CHECK(discriminant(IntPoly{-1, 0, 1}) == 4);  // x^2 - 1
    CHECK(discriminant(IntPoly{1, 1, 1}) == -3);  // x^2 + x + 1
    CHECK(discriminant(IntPoly{0, 0, 1}) == 0);   // x^2
    CHECK(discriminant(IntPoly{5, 3}) == 1);      // linear
    CHECK_THROWS_AS(discriminant(IntPoly{7}), std::domain_error);
}

TEST_CASE("squarefree part frozen cases") {
    CHECK(squarefree_part(IntPoly{0, 0, 1}) == IntPoly{0, 1});       // x^2 -> x
    CHECK(squarefree_part(IntPoly{2, -3, 0, 1}) == IntPoly{-2, 1, 1}); // (x-1)^2(x+2)
    CHECK(squarefree_part(IntPoly{1, 0, 1}) == IntPoly{1, 0, 1});    // already squarefree
    CHECK_THROWS_AS(squarefree_part(IntPoly()), std::domain_error);
}

TEST_CASE("squarefree part properties") {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<long> dist(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<BigInt> c(static_cast<std::size_t>(2 + rng() % 5));
        for (auto& v : c) v = dist(rng);
        IntPoly p(std::move(c));
        if (p.is_zero() || p.degree() < 1) continue;
        IntPoly s = squarefree_part(p);
        // Divides the primitive part exactly over the integers (Gauss).
        CHECK_NOTHROW(IntPoly::divide_exact(p.primitive_part(), s));
        // gcd with its own derivative is constant.
        CHECK(IntPoly::gcd(s, s.derivative()).degree() == 0);
        // disc = 0 exactly when the squarefree part is proper.
        bool proper = s.degree() < p.degree();
        CHECK((discriminant(p) == 0) == proper);
    }
}

TEST_CASE("polynomial gcd agrees with construction") {
    IntPoly a = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{3, 1}; // (x-1)^2 (x+3)
    IntPoly b = IntPoly{-1, 1} * IntPoly{5, 0, 1};               // (x-1)(x^2+5)
    CHECK(IntPoly::gcd(a, b) == IntPoly{-1, 1});
    CHECK(IntPoly::gcd(a, IntPoly{2}).degree() == 0);
}

TEST_CASE("univariate resultant degenerate shapes") {
    CHECK(resultant(IntPoly{4}, IntPoly{-1, 0, 1}) == 16); // const^deg
    CHECK(resultant(IntPoly{-1, 0, 1}, IntPoly{4}) == 16);
    CHECK(resultant(IntPoly{3}, IntPoly{5}) == 1);
    CHECK(resultant(IntPoly(), IntPoly{1, 1}) == 0);
}

TEST_CASE("Bareiss determinant equals cofactor expansion on random matrices") {
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<long> dist(-8, 8);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 5;
        std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
        for (auto& row : m)
            for (auto& v : row) v = dist(rng);
        CHECK(det_bareiss(m) == testutil::det_cofactor(m));
    }
}
