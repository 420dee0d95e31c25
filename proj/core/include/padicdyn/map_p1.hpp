#pragma once

#include "padicdyn/binform.hpp"

#include <utility>

namespace padicdyn {

/// A morphism of the projective line given by a pair of integer binary
/// forms (F : G) of common degree d >= 1. The pair is normalized so the
/// 2d+2 coefficients have gcd 1 and the highest nonzero coefficient of G
/// is positive; res(F, G) != 0 is enforced at construction.
class MapP1 {
public:
    MapP1(BinForm f, BinForm g);

    long degree() const { return numerator_.degree(); }
    const BinForm& numerator() const { return numerator_; }
    const BinForm& denominator() const { return denominator_; }
    const BigInt& map_resultant() const { return res_; }

    /// v_p(res(F, G)); zero exactly when the map has good reduction at p.
    long reduction_valuation(long p) const;
    bool good_reduction_at(long p) const { return reduction_valuation(p) == 0; }

    /// Composition (this o other), content removed.
    MapP1 compose(const MapP1& other) const;

    bool operator==(const MapP1& o) const {
        return numerator_ == o.numerator_ && denominator_ == o.denominator_;
    }

    /// Raw image of (x : z) with no projective normalization.
    std::pair<BigInt, BigInt> apply_raw(const BigInt& x, const BigInt& z) const {
        return {numerator_.eval(x, z), denominator_.eval(x, z)};
    }

private:
    BinForm numerator_, denominator_;
    BigInt res_;
};

} // namespace padicdyn
