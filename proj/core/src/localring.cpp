#include "padicdyn/localring.hpp"

#include "padicdyn/errors.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace padicdyn {

namespace {

// Raw coefficient-vector arithmetic in (Z/p^M)[x]/(E(x)); LocalElem wraps
// these so the ring spec can bootstrap its own cached inverse of C(pi).

void reduce_vec(const LocalRingSpec& r, std::vector<BigInt>& a) {
    for (auto& v : a) v = mod_reduce(v, r.pM);
}

std::vector<BigInt> mul_vec(const LocalRingSpec& r, const std::vector<BigInt>& a,
                            const std::vector<BigInt>& b) {
    const std::size_t e = static_cast<std::size_t>(r.e);
    std::vector<BigInt> prod(2 * e - 1, BigInt(0));
    for (std::size_t i = 0; i < e; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < e; ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    // Reduce modulo the monic Eisenstein polynomial.
    for (std::size_t k = prod.size(); k-- > e;) {
        if (prod[k] == 0) continue;
        BigInt t = prod[k];
        prod[k] = 0;
        for (std::size_t i = 0; i < e; ++i)
            prod[k - e + i] -= t * r.eisenstein.coeff(i);
    }
    prod.resize(e);
    reduce_vec(r, prod);
    return prod;
}

std::vector<BigInt> invert_vec(const LocalRingSpec& r, const std::vector<BigInt>& a) {
    long res = static_cast<long>(mpz_fdiv_ui(a[0].get_mpz_t(), static_cast<unsigned long>(r.p)));
    if (res == 0)
        throw NotAUnitError("local_invert: element has positive valuation");
    // Newton iteration x <- x(2 - ax) from the residue-field inverse.
    std::vector<BigInt> x(static_cast<std::size_t>(r.e), BigInt(0));
    x[0] = inv_mod(BigInt(res), BigInt(r.p));
    long steps = 1;
    while ((1L << steps) < r.e * r.M + 1 && steps < 62) ++steps;
    for (long s = 0; s <= steps; ++s) {
        std::vector<BigInt> ax = mul_vec(r, a, x);
        for (auto& v : ax) v = -v;
        ax[0] += 2;
        reduce_vec(r, ax);
        x = mul_vec(r, x, ax);
    }
    return x;
}

} // namespace

std::shared_ptr<const LocalRingSpec> LocalRingSpec::make(long p, long e, long N,
                                                         std::optional<IntPoly> eisenstein) {
    if (p < 2 || !is_prime(BigInt(p)))
        throw std::invalid_argument("LocalRingSpec: p must be a prime >= 2");
    if (e < 1) throw std::invalid_argument("LocalRingSpec: ramification index must be >= 1");
    if (N < 1) throw std::invalid_argument("LocalRingSpec: precision must be >= 1");
    auto spec = std::shared_ptr<LocalRingSpec>(new LocalRingSpec());
    spec->p = p;
    spec->e = e;
    spec->N = N;
    spec->M = (N + e - 1) / e;
    spec->pM = pow_int(BigInt(p), static_cast<unsigned long>(spec->M));
    spec->guaranteed = e * (spec->M - 1) + 1;
    if (eisenstein) {
        spec->eisenstein = std::move(*eisenstein);
    } else {
        std::vector<BigInt> c(static_cast<std::size_t>(e) + 1, BigInt(0));
        c[0] = -p;
        c[static_cast<std::size_t>(e)] = 1;
        spec->eisenstein = IntPoly(std::move(c));
    }
    const IntPoly& E = spec->eisenstein;
    if (E.degree() != e || E.leading() != 1)
        throw std::invalid_argument("LocalRingSpec: Eisenstein polynomial must be monic of degree e");
    for (long i = 0; i < e; ++i)
        if (E.coeff(static_cast<std::size_t>(i)) % p != 0)
            throw std::invalid_argument("LocalRingSpec: lower Eisenstein coefficients must be divisible by p");
    if (E.coeff(0) % (BigInt(p) * p) == 0)
        throw std::invalid_argument("LocalRingSpec: Eisenstein constant term divisible by p^2");
    // C(x) = sum (E_i / p) x^i for i < e, a unit of the ring; cache its
    // inverse for division by the uniformizer.
    std::vector<BigInt> c_vec(static_cast<std::size_t>(e), BigInt(0));
    for (long i = 0; i < e; ++i) c_vec[static_cast<std::size_t>(i)] = E.coeff(static_cast<std::size_t>(i)) / p;
    reduce_vec(*spec, c_vec);
    spec->inv_c = invert_vec(*spec, c_vec);
    return spec;
}

void LocalElem::check_same_ring(const LocalElem& o) const {
    if (!(*ring_ == *o.ring_))
        throw std::invalid_argument("LocalElem: operands from different ring specs");
}

LocalElem LocalElem::zero(LocalRingPtr ring) {
    std::vector<BigInt> a(static_cast<std::size_t>(ring->e), BigInt(0));
    return LocalElem(std::move(ring), std::move(a));
}

LocalElem LocalElem::one(LocalRingPtr ring) { return from_integer(std::move(ring), BigInt(1)); }

LocalElem LocalElem::uniformizer(LocalRingPtr ring) {
    if (ring->e == 1) {
        // x reduces to -E_0 = p modulo the degree-one Eisenstein polynomial.
        BigInt v = mod_reduce(-ring->eisenstein.coeff(0), ring->pM);
        return LocalElem(std::move(ring), {v});
    }
    std::vector<BigInt> a(static_cast<std::size_t>(ring->e), BigInt(0));
    a[1] = 1;
    return LocalElem(std::move(ring), std::move(a));
}

LocalElem LocalElem::from_integer(LocalRingPtr ring, const BigInt& n) {
    std::vector<BigInt> a(static_cast<std::size_t>(ring->e), BigInt(0));
    a[0] = mod_reduce(n, ring->pM);
    return LocalElem(std::move(ring), std::move(a));
}

LocalElem LocalElem::from_rational(LocalRingPtr ring, const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("from_rational: zero denominator");
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(ring->p)))
        throw NotAUnitError("from_rational: denominator has positive valuation at p");
    BigInt v = mod_reduce(num * inv_mod(mod_reduce(den, ring->pM), ring->pM), ring->pM);
    std::vector<BigInt> a(static_cast<std::size_t>(ring->e), BigInt(0));
    a[0] = v;
    return LocalElem(std::move(ring), std::move(a));
}

LocalElem LocalElem::from_coeffs(LocalRingPtr ring, std::vector<BigInt> coeffs) {
    coeffs.resize(static_cast<std::size_t>(ring->e), BigInt(0));
    reduce_vec(*ring, coeffs);
    return LocalElem(std::move(ring), std::move(coeffs));
}

LocalElem LocalElem::operator+(const LocalElem& o) const {
    check_same_ring(o);
    std::vector<BigInt> r(a_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_reduce(r[i] + o.a_[i], ring_->pM);
    return LocalElem(ring_, std::move(r));
}

LocalElem LocalElem::operator-(const LocalElem& o) const {
    check_same_ring(o);
    std::vector<BigInt> r(a_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_reduce(r[i] - o.a_[i], ring_->pM);
    return LocalElem(ring_, std::move(r));
}

LocalElem LocalElem::operator-() const {
    std::vector<BigInt> r(a_);
    for (auto& v : r) v = mod_reduce(-v, ring_->pM);
    return LocalElem(ring_, std::move(r));
}

LocalElem LocalElem::operator*(const LocalElem& o) const {
    check_same_ring(o);
    return LocalElem(ring_, mul_vec(*ring_, a_, o.a_));
}

long LocalElem::residue() const {
    return static_cast<long>(mpz_fdiv_ui(a_[0].get_mpz_t(), static_cast<unsigned long>(ring_->p)));
}

std::optional<long> LocalElem::valuation() const {
    // Term valuations e*v_p(a_i) + i are pairwise distinct mod e, so the
    // minimum over nonzero coefficients is exact (no cancellation).
    long best = -1;
    const BigInt p(ring_->p);
    for (long i = 0; i < ring_->e; ++i) {
        const BigInt& ai = a_[static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        long v = ring_->e * p_valuation(ai, p) + i;
        if (best < 0 || v < best) best = v;
    }
    if (best < 0 || best >= ring_->guaranteed) return std::nullopt;
    return best;
}

LocalElem LocalElem::invert() const {
    if (residue() == 0) throw NotAUnitError("local_invert: element has positive valuation");
    return LocalElem(ring_, invert_vec(*ring_, a_));
}

LocalElem LocalElem::div_by_pi(long k) const {
    LocalElem v = *this;
    const long e = ring_->e;
    for (long step = 0; step < k; ++step) {
        auto val = v.valuation();
        if (val.has_value() && *val < 1)
            throw std::domain_error("div_by_pi: element is a unit");
        std::vector<BigInt> shifted(static_cast<std::size_t>(e), BigInt(0));
        for (long i = 1; i < e; ++i) shifted[static_cast<std::size_t>(i - 1)] = v.a_[static_cast<std::size_t>(i)];
        // a_0 = p * t with t exact, and p/pi = -pi^(e-1) / C(pi).
        BigInt t = v.a_[0] / ring_->p;
        if (t != 0) {
            std::vector<BigInt> mono(static_cast<std::size_t>(e), BigInt(0));
            mono[static_cast<std::size_t>(e - 1)] = mod_reduce(-t, ring_->pM);
            std::vector<BigInt> corr = mul_vec(*ring_, mono, ring_->inv_c);
            for (long i = 0; i < e; ++i) shifted[static_cast<std::size_t>(i)] += corr[static_cast<std::size_t>(i)];
        }
        reduce_vec(*ring_, shifted);
        v = LocalElem(ring_, std::move(shifted));
    }
    return v;
}

std::vector<long> LocalElem::digits(long count) const {
    if (count < 0 || count > ring_->guaranteed)
        throw std::invalid_argument("digits: count beyond guaranteed precision");
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(count));
    LocalElem v = *this;
    for (long k = 0; k < count; ++k) {
        long d = v.residue();
        out.push_back(d);
        if (d != 0) v = v - from_integer(ring_, BigInt(d));
        v = v.div_by_pi();
    }
    return out;
}

LocalElem LocalElem::truncate_digits(long count) const {
    if (count < 0) count = 0;
    if (count > ring_->guaranteed) count = ring_->guaranteed;
    std::vector<long> ds = digits(count);
    LocalElem acc = zero(ring_);
    LocalElem pik = one(ring_);
    LocalElem pi = uniformizer(ring_);
    for (long k = 0; k < count; ++k) {
        if (ds[static_cast<std::size_t>(k)] != 0)
            acc = acc + from_integer(ring_, BigInt(ds[static_cast<std::size_t>(k)])) * pik;
        pik = pik * pi;
    }
    return acc;
}

std::string LocalElem::digit_string() const {
    std::vector<long> ds = digits(ring_->guaranteed);
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < ds.size(); ++k) {
        if (ds[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0)
            os << ds[k];
        else if (k == 1)
            os << ds[k] << "*pi";
        else
            os << ds[k] << "*pi^" << k;
    }
    if (first) return "0";
    return os.str();
}

LocalElem LocalElem::parse_digit_string(LocalRingPtr ring, const std::string& text) {
    LocalElem acc = zero(ring);
    LocalElem pi = uniformizer(ring);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return acc;
    bool expect_term = true;
    while (i < text.size()) {
        skip_ws();
        if (!expect_term) {
            if (text[i] != '+') throw std::invalid_argument("digit string: expected '+'");
            ++i;
            skip_ws();
        }
        expect_term = false;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("digit string: expected digit");
        long d = std::stol(text.substr(start, i - start));
        long k = 0;
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
            if (text.compare(i, 2, "pi") != 0) throw std::invalid_argument("digit string: expected 'pi'");
            i += 2;
            k = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == start) throw std::invalid_argument("digit string: expected exponent");
                k = std::stol(text.substr(start, i - start));
            }
        }
        if (d < 0 || d >= ring->p) throw std::invalid_argument("digit string: digit out of range");
        LocalElem term = from_integer(ring, BigInt(d));
        LocalElem pik = one(ring);
        for (long j = 0; j < k; ++j) pik = pik * pi;
        acc = acc + term * pik;
        skip_ws();
    }
    return acc;
}

std::string LocalElem::coeff_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i) os << ", ";
        os << a_[i].get_str();
    }
    os << "]";
    return os.str();
}

LocalElem LocalElem::parse_coeff_string(LocalRingPtr ring, const std::string& text) {
    std::vector<BigInt> coeffs;
    std::string body = text;
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw std::invalid_argument("coeff string: expected [a0, a1, ...]");
    body = body.substr(1, body.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t a = tok.find_first_not_of(' ');
        std::size_t b = tok.find_last_not_of(' ');
        if (a == std::string::npos) throw std::invalid_argument("coeff string: empty entry");
        coeffs.emplace_back(tok.substr(a, b - a + 1));
    }
    return from_coeffs(std::move(ring), std::move(coeffs));
}

LocalElem LocalElem::eval_poly(const IntPoly& poly, const LocalElem& x) {
    LocalElem acc = zero(x.ring());
    for (std::size_t i = poly.coeffs().size(); i-- > 0;)
        acc = acc * x + from_integer(x.ring(), poly.coeff(i));
    return acc;
}

} // namespace padicdyn
