#include "padicdyn/intpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace padicdyn {

namespace {

const BigInt kZero(0);

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  =  q*b + r,  deg r < deg b.
// Callers guarantee deg a >= deg b >= 1.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    const long db = b.degree();
    std::vector<BigInt> r(a.coeffs());
    const BigInt& lb = b.leading();
    const long da = a.degree();
    for (long k = da; k >= db; --k) {
        // Scale the whole remainder once per elimination step.
        BigInt top = r[static_cast<std::size_t>(k)];
        for (auto& ci : r) ci *= lb;
        if (top != 0) {
            for (long i = 0; i <= db; ++i)
                r[static_cast<std::size_t>(k - db + i)] -= top * b.coeff(static_cast<std::size_t>(i));
        }
        r.resize(static_cast<std::size_t>(k)); // degree drops below k
    }
    return IntPoly(std::move(r));
}

// One-sided modular shortcut: if gcd(a mod q, b mod q) is constant for a
// prime q not dividing either leading coefficient, then gcd(a, b) has
// degree 0 over Q.
bool coprime_mod_small_prime(const IntPoly& a, const IntPoly& b) {
    static const long qs[] = {1000003, 1000033, 1000037};
    auto deg = [](const std::vector<long>& w) {
        long d = static_cast<long>(w.size()) - 1;
        while (d >= 0 && w[static_cast<std::size_t>(d)] == 0) --d;
        return d;
    };
    for (long q : qs) {
        if (mpz_divisible_ui_p(a.leading().get_mpz_t(), static_cast<unsigned long>(q)) ||
            mpz_divisible_ui_p(b.leading().get_mpz_t(), static_cast<unsigned long>(q)))
            continue;
        std::vector<long> u, v;
        u.reserve(a.coeffs().size());
        v.reserve(b.coeffs().size());
        for (const auto& ci : a.coeffs())
            u.push_back(static_cast<long>(mpz_fdiv_ui(ci.get_mpz_t(), static_cast<unsigned long>(q))));
        for (const auto& ci : b.coeffs())
            v.push_back(static_cast<long>(mpz_fdiv_ui(ci.get_mpz_t(), static_cast<unsigned long>(q))));
        auto inv = [q](long x) {
            long r = 1, base = x % q, e = q - 2;
            while (e) {
                if (e & 1) r = static_cast<long>((__int128)r * base % q);
                base = static_cast<long>((__int128)base * base % q);
                e >>= 1;
            }
            return r;
        };
        // Euclid over F_q: u <- u mod v, swap.
        while (deg(v) >= 0) {
            long du = deg(u), dv = deg(v);
            if (du < dv) {
                std::swap(u, v);
                continue;
            }
            long f = static_cast<long>((__int128)u[static_cast<std::size_t>(du)] *
                                       inv(v[static_cast<std::size_t>(dv)]) % q);
            for (long i = 0; i <= dv; ++i) {
                long& t = u[static_cast<std::size_t>(du - dv + i)];
                t = static_cast<long>(((__int128)t - (__int128)f * v[static_cast<std::size_t>(i)]) % q);
                if (t < 0) t += q;
            }
            u.resize(static_cast<std::size_t>(du)); // leading term cancelled exactly
            if (deg(u) < dv) std::swap(u, v);
        }
        return deg(u) == 0;
    }
    return false;
}

} // namespace

const BigInt& IntPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> r(c_);
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const BigInt& s) const {
    std::vector<BigInt> r(c_);
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<BigInt> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigInt(static_cast<long>(i));
    return IntPoly(std::move(r));
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

BigInt IntPoly::content() const {
    BigInt g(0);
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    std::vector<BigInt> r(c_);
    for (auto& v : r) v /= g;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::normalized() const {
    IntPoly p = primitive_part();
    if (!p.is_zero() && p.leading() < 0) p = -p;
    return p;
}

IntPoly IntPoly::divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    long da = a.degree(), db = b.degree();
    if (da < db) throw std::domain_error("divide_exact: not divisible");
    std::vector<BigInt> rem(a.coeffs());
    std::vector<BigInt> q(static_cast<std::size_t>(da - db + 1), BigInt(0));
    for (long k = da; k >= db; --k) {
        BigInt& top = rem[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        BigInt t;
        mpz_fdiv_qr(t.get_mpz_t(), top.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
        if (top != 0) throw std::domain_error("divide_exact: not divisible");
        q[static_cast<std::size_t>(k - db)] = t;
        for (long i = 0; i < db; ++i)
            rem[static_cast<std::size_t>(k - db + i)] -= t * b.coeff(static_cast<std::size_t>(i));
    }
    for (const auto& v : rem)
        if (v != 0) throw std::domain_error("divide_exact: not divisible");
    return IntPoly(std::move(q));
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    BigInt cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    if (a.degree() > 0 && b.degree() > 0 && coprime_mod_small_prime(a, b))
        return IntPoly::constant(cont);
    IntPoly u = a.primitive_part(), v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero() && v.degree() > 0) {
        IntPoly r = pseudo_rem(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    IntPoly g = v.is_zero() ? u : IntPoly::constant(BigInt(1));
    g = g.normalized();
    return g * cont;
}

BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return BigInt(1);
    int sign = 1;
    BigInt prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return BigInt(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

BigInt resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return BigInt(0);
    const long da = a.degree(), db = b.degree();
    if (da == 0 && db == 0) return BigInt(1);
    if (da == 0) return pow_int(a.coeff(0), static_cast<unsigned long>(db));
    if (db == 0) return pow_int(b.coeff(0), static_cast<unsigned long>(da));
    const std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<BigInt>> s(n, std::vector<BigInt>(n, BigInt(0)));
    for (long row = 0; row < db; ++row)
        for (long i = 0; i <= da; ++i)
            s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + i)] =
                a.coeff(static_cast<std::size_t>(da - i));
    for (long row = 0; row < da; ++row)
        for (long i = 0; i <= db; ++i)
            s[static_cast<std::size_t>(db + row)][static_cast<std::size_t>(row + i)] =
                b.coeff(static_cast<std::size_t>(db - i));
    return det_bareiss(std::move(s));
}

BigInt discriminant(const IntPoly& p) {
    const long d = p.degree();
    if (d < 1) throw std::domain_error("discriminant: degree >= 1 required");
    BigInt r = resultant(p, p.derivative());
    BigInt q;
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
    return (d * (d - 1) / 2) % 2 == 0 ? q : -q;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (p.degree() == 0) return IntPoly::constant(BigInt(1));
    IntPoly g = IntPoly::gcd(p, p.derivative());
    IntPoly q = IntPoly::divide_exact(p.primitive_part(), g.normalized());
    return q.normalized();
}

} // namespace padicdyn
