#pragma once

#include "padicdyn/bigint.hpp"

#include <initializer_list>
#include <vector>

namespace padicdyn {

/// Univariate polynomial with exact integer coefficients, stored lowest
/// degree first. The zero polynomial has an empty coefficient vector and
/// degree -1; otherwise the trailing coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly constant(BigInt v) {
        IntPoly r;
        r.c_.push_back(std::move(v));
        r.trim();
        return r;
    }
    static IntPoly monomial(BigInt coeff, std::size_t exp) {
        IntPoly r;
        r.c_.assign(exp + 1, BigInt(0));
        r.c_[exp] = std::move(coeff);
        r.trim();
        return r;
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    /// Coefficient of x^i (zero beyond the degree).
    const BigInt& coeff(std::size_t i) const;
    const BigInt& leading() const { return c_.back(); }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const BigInt& s) const;

    IntPoly derivative() const;
    BigInt eval(const BigInt& x) const;

    /// gcd of all coefficients, >= 0 (zero only for the zero polynomial).
    BigInt content() const;
    /// Divides out the content; sign is preserved. Zero stays zero.
    IntPoly primitive_part() const;
    /// Primitive part with positive leading coefficient.
    IntPoly normalized() const;

    /// Exact quotient a / b over Z; throws std::domain_error when b does not
    /// divide a exactly.
    static IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

    /// Integer polynomial gcd by the primitive polynomial remainder
    /// sequence; result is normalized (primitive, positive leading
    /// coefficient) times gcd of the contents.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

/// Exact determinant by fraction-free (Bareiss) Gaussian elimination.
BigInt det_bareiss(std::vector<std::vector<BigInt>> m);

/// Sylvester resultant of two univariate integer polynomials.
/// res(a, b) = 0 when either input is zero (and the other is nonconstant).
BigInt resultant(const IntPoly& a, const IntPoly& b);

/// disc(p) = (-1)^{d(d-1)/2} res(p, p') / lc(p), exact. Degree >= 1 required.
BigInt discriminant(const IntPoly& p);

/// p / gcd(p, p'), primitive with positive leading coefficient. Same root
/// set as p with every root simple. p must be nonzero.
IntPoly squarefree_part(const IntPoly& p);

} // namespace padicdyn
