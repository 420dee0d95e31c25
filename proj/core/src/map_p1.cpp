#include "padicdyn/map_p1.hpp"

#include "padicdyn/errors.hpp"

namespace padicdyn {

MapP1::MapP1(BinForm f, BinForm g) : numerator_(std::move(f)), denominator_(std::move(g)) {
    if (numerator_.degree() != denominator_.degree())
        throw std::invalid_argument("MapP1: forms must have equal degree");
    if (numerator_.degree() < 1) throw DegreeZeroError();
    // Joint content out, then sign by the highest nonzero coefficient of G.
    BigInt c(0);
    for (const auto& v : numerator_.coeffs()) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
    for (const auto& v : denominator_.coeffs()) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
    if (c == 0) throw NotAMorphismError(); // both forms zero
    if (c != 1) {
        std::vector<BigInt> fn(numerator_.coeffs()), gn(denominator_.coeffs());
        for (auto& v : fn) v /= c;
        for (auto& v : gn) v /= c;
        numerator_ = BinForm(std::move(fn));
        denominator_ = BinForm(std::move(gn));
    }
    bool flip = false;
    for (std::size_t i = denominator_.coeffs().size(); i-- > 0;) {
        if (denominator_.coeff(i) != 0) {
            flip = denominator_.coeff(i) < 0;
            break;
        }
    }
    if (denominator_.is_zero()) {
        // Sign falls to F when G = 0; the resultant check below rejects
        // the map anyway, but keep the state canonical.
        for (std::size_t i = numerator_.coeffs().size(); i-- > 0;) {
            if (numerator_.coeff(i) != 0) {
                flip = numerator_.coeff(i) < 0;
                break;
            }
        }
    }
    if (flip) {
        numerator_ = numerator_ * BigInt(-1);
        denominator_ = denominator_ * BigInt(-1);
    }
    res_ = resultant(numerator_, denominator_);
    if (res_ == 0) throw NotAMorphismError();
}

long MapP1::reduction_valuation(long p) const {
    return mpz_divisible_ui_p(res_.get_mpz_t(), static_cast<unsigned long>(p))
               ? p_valuation(res_, BigInt(p))
               : 0;
}

MapP1 MapP1::compose(const MapP1& other) const {
    return MapP1(numerator_.compose(other.numerator_, other.denominator_),
                 denominator_.compose(other.numerator_, other.denominator_));
}

} // namespace padicdyn
