#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace padicdyn {

// Exact arbitrary-precision signed integers. GMP supplies the arithmetic;
// everything built on top of it in this library is exact, never floating.
using BigInt = mpz_class;

inline BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline bool is_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

/// v_p(n) for n != 0. Returns 0 for units, throws on n = 0.
long p_valuation(const BigInt& n, const BigInt& p);

/// Multiplicative inverse of a modulo m (gcd(a, m) = 1 required).
BigInt inv_mod(const BigInt& a, const BigInt& m);

/// Canonical representative of a modulo m in [0, m).
inline BigInt mod_reduce(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Ascending list of all positive divisors of n >= 1.
std::vector<long> divisors(long n);

/// Ascending distinct prime factors of n >= 1 found by trial division up to
/// the given bound; a leftover cofactor > 1 is appended as-is (it is prime
/// whenever it is below bound^2).
std::vector<BigInt> prime_factors(const BigInt& n, long trial_bound = 1000000);

} // namespace padicdyn
