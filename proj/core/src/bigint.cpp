#include "padicdyn/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace padicdyn {

long p_valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw std::invalid_argument("p_valuation of zero");
    BigInt m = abs(n);
    long v = 0;
    // Divide out p in exponentially growing chunks to keep the loop short
    // on highly divisible inputs.
    BigInt q, r, pk = p;
    long k = 1;
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), pk.get_mpz_t());
        if (r != 0) break;
        m = q;
        v += k;
        if (pk <= m) {
            pk *= pk;
            k *= 2;
        }
    }
    if (k > 1) {
        // Finish with single steps.
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++v;
        }
    }
    return v;
}

BigInt inv_mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::invalid_argument("inv_mod: not invertible");
    return r;
}

std::vector<long> divisors(long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<BigInt> prime_factors(const BigInt& n, long trial_bound) {
    BigInt m = abs(n);
    std::vector<BigInt> out;
    if (m <= 1) return out;
    for (long q = 2; q <= trial_bound && BigInt(q) * q <= m; q = (q == 2 ? 3 : q + 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(q))) {
            out.emplace_back(q);
            while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(q)))
                m /= q;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

} // namespace padicdyn
