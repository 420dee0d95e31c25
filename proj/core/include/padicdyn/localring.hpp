#pragma once

#include "padicdyn/intpoly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace padicdyn {

/// The ring of integers O = Z_p[pi]/(E(pi)) of a totally ramified degree-e
/// extension of Q_p, truncated to working precision N in pi-units. Elements
/// are length-e coefficient vectors modulo p^M with M = ceil(N/e); all
/// equality and certification decisions use the guaranteed precision
/// e*(M-1)+1, never N optimistically.
class LocalRingSpec {
public:
    long p;          // residue characteristic, prime
    long e;          // ramification index, e = v(p)
    IntPoly eisenstein; // monic degree-e Eisenstein polynomial, default x^e - p
    long N;          // requested precision in pi-units
    long M;          // coefficient precision, ceil(N/e)
    BigInt pM;       // p^M
    long guaranteed; // e*(M-1)+1

    // Coefficients (length e, reduced mod p^M) of the inverse of
    // C(pi) = -pi^e / p, used when dividing by the uniformizer.
    std::vector<BigInt> inv_c;

    static std::shared_ptr<const LocalRingSpec>
    make(long p, long e, long N, std::optional<IntPoly> eisenstein = std::nullopt);

    /// Same ring up to the stated precision.
    bool same_field(const LocalRingSpec& o) const {
        return p == o.p && e == o.e && eisenstein == o.eisenstein;
    }
    bool operator==(const LocalRingSpec& o) const { return same_field(o) && N == o.N; }

private:
    LocalRingSpec() = default;
};

using LocalRingPtr = std::shared_ptr<const LocalRingSpec>;

/// An element of the truncated local ring: sum a_i pi^i with a_i in
/// [0, p^M). Values are immutable; all arithmetic is exact in
/// (Z/p^M)[x]/(E(x)).
class LocalElem {
public:
    static LocalElem zero(LocalRingPtr ring);
    static LocalElem one(LocalRingPtr ring);
    static LocalElem uniformizer(LocalRingPtr ring);
    static LocalElem from_integer(LocalRingPtr ring, const BigInt& n);
    /// a/b with v(b) = 0; rejects denominators divisible by p.
    static LocalElem from_rational(LocalRingPtr ring, const BigInt& num, const BigInt& den);
    static LocalElem from_coeffs(LocalRingPtr ring, std::vector<BigInt> coeffs);

    const LocalRingPtr& ring() const { return ring_; }
    const std::vector<BigInt>& coeffs() const { return a_; }

    LocalElem operator+(const LocalElem& o) const;
    LocalElem operator-(const LocalElem& o) const;
    LocalElem operator*(const LocalElem& o) const;
    LocalElem operator-() const;

    /// Residue-field image a_0 mod p.
    long residue() const;

    /// pi-adic valuation; nullopt means "zero at guaranteed precision"
    /// (v >= guaranteed).
    std::optional<long> valuation() const;
    bool is_zero_at_precision() const { return !valuation().has_value(); }
    bool equals_at_precision(const LocalElem& o) const {
        return (*this - o).is_zero_at_precision();
    }

    /// Multiplicative inverse of a unit; NotAUnitError when v(a) > 0.
    LocalElem invert() const;

    /// Exact division by pi^k; requires v >= k (zero-at-precision allowed).
    LocalElem div_by_pi(long k = 1) const;

    /// First `count` pi-adic digits, each in [0, p). count <= guaranteed.
    std::vector<long> digits(long count) const;

    /// Canonical representative agreeing with this element on the first
    /// `count` digits, zero beyond.
    LocalElem truncate_digits(long count) const;

    /// Compact digit rendering "d0 + d1*pi + d2*pi^2 + ...", zero digits
    /// skipped, all guaranteed digits considered; the zero element prints
    /// "0". Lossless at guaranteed precision together with the ring.
    std::string digit_string() const;
    static LocalElem parse_digit_string(LocalRingPtr ring, const std::string& text);

    /// Coefficient-vector rendering "[a0, a1, ...]" mod p^M (lossless).
    std::string coeff_string() const;
    static LocalElem parse_coeff_string(LocalRingPtr ring, const std::string& text);

    /// Horner evaluation of an integer polynomial at this element.
    static LocalElem eval_poly(const IntPoly& poly, const LocalElem& x);

private:
    LocalElem(LocalRingPtr ring, std::vector<BigInt> coeffs)
        : ring_(std::move(ring)), a_(std::move(coeffs)) {}
    void check_same_ring(const LocalElem& o) const;

    LocalRingPtr ring_;
    std::vector<BigInt> a_;
};

} // namespace padicdyn
