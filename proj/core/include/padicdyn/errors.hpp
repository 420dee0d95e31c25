#pragma once

#include <stdexcept>
#include <string>

namespace padicdyn {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The map does not extend to a morphism over Z_p: p divides res(F, G).
class BadReductionError : public Error {
public:
    BadReductionError(long p, long res_valuation)
        : Error("bad reduction at p=" + std::to_string(p) +
                " (v_p(resultant) = " + std::to_string(res_valuation) + ")"),
          p(p), res_valuation(res_valuation) {}
    long p;
    long res_valuation;
};

/// d^n exceeded the configured iteration degree cap.
class SizeCapExceededError : public Error {
public:
    SizeCapExceededError(const std::string& what, long cap)
        : Error("size cap exceeded: " + what + " (cap " + std::to_string(cap) + ")"),
          cap(cap) {}
    long cap;
};

/// The decisive lifting precision exceeds the configured maximum.
class PrecisionTooLowError : public Error {
public:
    PrecisionTooLowError(long needed, long max_precision)
        : Error("precision too low: certified search needs N >= " + std::to_string(needed) +
                " pi-units but the maximum precision is " + std::to_string(max_precision)),
          needed(needed), max_precision(max_precision) {}
    long needed;
    long max_precision;
};

/// Inversion of a non-unit in the local ring.
class NotAUnitError : public Error {
public:
    explicit NotAUnitError(const std::string& msg) : Error(msg) {}
};

/// Map-expression syntax error, with byte position into the source text.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Constant maps are rejected: they carry no dynamics on P^1.
class DegreeZeroError : public Error {
public:
    DegreeZeroError() : Error("constant map rejected (degree 0)") {}
};

/// res(F, G) = 0: the input is a rational map with a base point, not a morphism.
class NotAMorphismError : public Error {
public:
    NotAMorphismError() : Error("not a morphism: the two forms share a projective root (resultant = 0)") {}
};

/// Some iterate of the map is the identity, so every point of P^1(K) is
/// periodic and the certificate list would be infinite.
class IdentityIterateError : public Error {
public:
    explicit IdentityIterateError(long n)
        : Error("f^" + std::to_string(n) +
                " is the identity map: every point of P^1(K) is periodic"),
          n(n) {}
    long n;
};

} // namespace padicdyn
