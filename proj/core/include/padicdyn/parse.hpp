#pragma once

#include "padicdyn/map_p1.hpp"

#include <string>
#include <vector>

namespace padicdyn {

/// A parsed map expression: the source text, the normalized primitive map,
/// and any warnings generated while normalizing (cleared denominators,
/// primes with guaranteed bad reduction).
struct MapExpr {
    std::string source;
    MapP1 map;
    std::vector<std::string> warnings;
};

/// Parse an affine rational function in x with integer or rational
/// coefficients:
///   map  := poly ('/' poly)?            (either poly may be parenthesized)
///   poly := term (('+'|'-') term)*
///   term := coeff? ('x' ('^' nat)?)?
/// The result is homogenized to a pair of degree-d forms; denominators are
/// cleared with a recorded warning.
MapExpr parse_map(const std::string& text);

/// Canonical re-parseable rendering: "x^2 - 1" for polynomial maps,
/// "(x^2 + 1)/(2x)" otherwise.
std::string print_map(const MapP1& f);

/// Parse "c0,c1,...;d0,d1,..." (coefficients of X^i Z^(d-i), ascending i)
/// into a map; the escape hatch for maps given directly as form pairs.
MapExpr parse_forms(const std::string& text);

/// Univariate integer polynomial, same term grammar (used for Eisenstein
/// polynomials given on the command line).
IntPoly parse_int_poly(const std::string& text);

std::string print_int_poly(const IntPoly& p, const std::string& var = "x");

} // namespace padicdyn
