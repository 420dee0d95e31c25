#include "padicdyn/binform.hpp"

#include <stdexcept>

namespace padicdyn {

bool BinForm::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

BigInt BinForm::eval(const BigInt& x, const BigInt& z) const {
    const long d = degree();
    std::vector<BigInt> zp(static_cast<std::size_t>(d) + 1);
    zp[0] = 1;
    for (long i = 1; i <= d; ++i) zp[static_cast<std::size_t>(i)] = zp[static_cast<std::size_t>(i - 1)] * z;
    BigInt acc(0), xp(1);
    for (long i = 0; i <= d; ++i) {
        if (c_[static_cast<std::size_t>(i)] != 0)
            acc += c_[static_cast<std::size_t>(i)] * xp * zp[static_cast<std::size_t>(d - i)];
        if (i < d) xp *= x;
    }
    return acc;
}

BigInt BinForm::content() const {
    BigInt g(0);
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

BinForm BinForm::normalized() const {
    if (is_zero()) return *this;
    BigInt g = content();
    for (const auto& v : c_) {
        if (v != 0) {
            if (v < 0) g = -g;
            break;
        }
    }
    std::vector<BigInt> r(c_);
    for (auto& v : r) v /= g;
    return BinForm(std::move(r));
}

BinForm BinForm::operator*(const BinForm& o) const {
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
    }
    return BinForm(std::move(r));
}

BinForm BinForm::operator-(const BinForm& o) const {
    if (degree() != o.degree()) throw std::invalid_argument("BinForm: degree mismatch");
    std::vector<BigInt> r(c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
    return BinForm(std::move(r));
}

BinForm BinForm::operator*(const BigInt& s) const {
    std::vector<BigInt> r(c_);
    for (auto& v : r) v *= s;
    return BinForm(std::move(r));
}

BinForm BinForm::pow(unsigned long k) const {
    BinForm acc({1});
    BinForm base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

BinForm BinForm::times_x() const {
    std::vector<BigInt> r(c_.size() + 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i];
    return BinForm(std::move(r));
}

BinForm BinForm::times_z() const {
    std::vector<BigInt> r(c_);
    r.push_back(BigInt(0));
    return BinForm(std::move(r));
}

BinForm BinForm::compose(const BinForm& a, const BinForm& b) const {
    const long d = degree();
    const long da = a.degree();
    if (da != b.degree()) throw std::invalid_argument("BinForm::compose: pair degree mismatch");
    // Powers of the substituted pair, then one accumulation pass.
    std::vector<BinForm> ap, bp;
    ap.reserve(static_cast<std::size_t>(d) + 1);
    bp.reserve(static_cast<std::size_t>(d) + 1);
    ap.emplace_back(BinForm({1}));
    bp.emplace_back(BinForm({1}));
    for (long i = 1; i <= d; ++i) {
        ap.push_back(ap.back() * a);
        bp.push_back(bp.back() * b);
    }
    std::vector<BigInt> r(static_cast<std::size_t>(d * da) + 1, BigInt(0));
    for (long i = 0; i <= d; ++i) {
        if (c_[static_cast<std::size_t>(i)] == 0) continue;
        BinForm term = ap[static_cast<std::size_t>(i)] * bp[static_cast<std::size_t>(d - i)];
        for (std::size_t j = 0; j < term.coeffs().size(); ++j)
            r[j] += c_[static_cast<std::size_t>(i)] * term.coeff(j);
    }
    return BinForm(std::move(r));
}

std::vector<long> BinForm::reduce_mod(long p) const {
    std::vector<long> r;
    r.reserve(c_.size());
    for (const auto& v : c_)
        r.push_back(static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p))));
    return r;
}

BigInt resultant(const BinForm& f, const BinForm& g) {
    const long d = f.degree(), e = g.degree();
    if (d < 1 || e < 1) throw std::domain_error("resultant: form degrees must be >= 1");
    const std::size_t n = static_cast<std::size_t>(d + e);
    std::vector<std::vector<BigInt>> s(n, std::vector<BigInt>(n, BigInt(0)));
    // Rows of f coefficients (descending X-degree), then rows of g.
    for (long row = 0; row < e; ++row)
        for (long i = 0; i <= d; ++i)
            s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + i)] =
                f.coeff(static_cast<std::size_t>(d - i));
    for (long row = 0; row < d; ++row)
        for (long i = 0; i <= e; ++i)
            s[static_cast<std::size_t>(e + row)][static_cast<std::size_t>(row + i)] =
                g.coeff(static_cast<std::size_t>(e - i));
    return det_bareiss(std::move(s));
}

} // namespace padicdyn
