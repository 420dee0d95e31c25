#pragma once

#include "padicdyn/intpoly.hpp"

#include <vector>

namespace padicdyn {

/// Homogeneous binary form of fixed degree d >= 0 in X, Z with integer
/// coefficients. coeff(i) multiplies X^i Z^(d-i); the zero form of a given
/// degree keeps all d+1 coefficients zero.
class BinForm {
public:
    explicit BinForm(long degree) : c_(static_cast<std::size_t>(degree) + 1, BigInt(0)) {}
    explicit BinForm(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(BigInt(0));
    }
    BinForm(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        if (c_.empty()) c_.push_back(BigInt(0));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const BigInt& coeff(std::size_t i) const { return c_[i]; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const;

    bool operator==(const BinForm& o) const { return c_ == o.c_; }
    bool operator!=(const BinForm& o) const { return c_ != o.c_; }

    BigInt eval(const BigInt& x, const BigInt& z) const;

    /// F(x, 1) as a univariate polynomial in x.
    IntPoly dehomogenize_x() const { return IntPoly(c_); }
    /// F(1, w) as a univariate polynomial in w (the chart at infinity).
    IntPoly dehomogenize_w() const {
        return IntPoly(std::vector<BigInt>(c_.rbegin(), c_.rend()));
    }

    BigInt content() const;
    /// Primitive with the first nonzero coefficient (lowest X-degree) positive.
    BinForm normalized() const;

    BinForm operator*(const BinForm& o) const;
    BinForm operator-(const BinForm& o) const;
    BinForm operator*(const BigInt& s) const;
    BinForm pow(unsigned long k) const;

    /// Multiply by X (degree rises by one, indices shift up).
    BinForm times_x() const;
    /// Multiply by Z (degree rises by one, indices stay).
    BinForm times_z() const;

    /// Substitute the pair (a, b) for (X, Z): result has degree
    /// degree() * a.degree().
    BinForm compose(const BinForm& a, const BinForm& b) const;

    /// Coefficients reduced into [0, p).
    std::vector<long> reduce_mod(long p) const;

private:
    std::vector<BigInt> c_;
};

/// Sylvester resultant of two binary forms of degrees >= 1 (taken as their
/// declared form degrees, vanishing leading coefficients included). Zero
/// exactly when the forms share a projective root over the closure.
BigInt resultant(const BinForm& f, const BinForm& g);

} // namespace padicdyn
