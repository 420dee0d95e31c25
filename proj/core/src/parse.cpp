#include "padicdyn/parse.hpp"

#include "padicdyn/errors.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace padicdyn {

namespace {

enum class Tok { Int, X, Caret, Plus, Minus, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    BigInt value;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Tok::Int, BigInt(text.substr(start, i - start)), start});
            continue;
        }
        Tok k;
        switch (c) {
        case 'x': k = Tok::X; break;
        case '^': k = Tok::Caret; break;
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '/': k = Tok::Slash; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, BigInt(0), i});
        ++i;
    }
    out.push_back({Tok::End, BigInt(0), text.size()});
    return out;
}

// Sparse polynomial over Q during parsing.
using QPoly = std::map<unsigned long, mpq_class>;

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    // map := operand ('/' operand)? END
    std::pair<QPoly, QPoly> parse_map_level() {
        QPoly num = parse_operand();
        QPoly den;
        den[0] = 1;
        if (peek().kind == Tok::Slash) {
            ++i_;
            den = parse_operand();
        }
        if (peek().kind != Tok::End) throw ParseError("unexpected trailing input", peek().pos);
        return {std::move(num), std::move(den)};
    }

    QPoly parse_poly_whole() {
        QPoly p = parse_sum();
        if (peek().kind != Tok::End) throw ParseError("unexpected trailing input", peek().pos);
        return p;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t j = i_ + ahead;
        return j < toks_.size() ? toks_[j] : toks_.back();
    }

    QPoly parse_operand() {
        if (peek().kind == Tok::LParen) {
            ++i_;
            QPoly p = parse_sum();
            if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().pos);
            ++i_;
            return p;
        }
        return parse_sum();
    }

    QPoly parse_sum() {
        QPoly acc;
        int sign = 1;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            sign = peek().kind == Tok::Minus ? -1 : 1;
            ++i_;
        }
        while (true) {
            auto [coeff, exp] = parse_term();
            acc[exp] += sign * coeff;
            if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
                sign = peek().kind == Tok::Minus ? -1 : 1;
                ++i_;
                continue;
            }
            break;
        }
        return acc;
    }

    // term := coeff? ('x' ('^' nat)?)?  with "a/b" taken as a rational
    // coefficient only when an x follows (otherwise '/' belongs to the map).
    std::pair<mpq_class, unsigned long> parse_term() {
        mpq_class coeff;
        bool have_coeff = false;
        if (peek().kind == Tok::Int) {
            coeff = mpq_class(peek().value);
            ++i_;
            have_coeff = true;
            if (peek().kind == Tok::Slash && peek(1).kind == Tok::Int && peek(2).kind == Tok::X) {
                if (peek(1).value == 0)
                    throw ParseError("zero denominator in coefficient", peek(1).pos);
                coeff /= mpq_class(peek(1).value);
                i_ += 2;
            }
        }
        unsigned long exp = 0;
        if (peek().kind == Tok::X) {
            ++i_;
            exp = 1;
            if (peek().kind == Tok::Caret) {
                ++i_;
                if (peek().kind != Tok::Int) throw ParseError("expected exponent", peek().pos);
                if (!peek().value.fits_ulong_p())
                    throw ParseError("exponent too large", peek().pos);
                exp = peek().value.get_ui();
                ++i_;
            }
        } else if (!have_coeff) {
            throw ParseError("expected term", peek().pos);
        }
        if (!have_coeff) coeff = 1;
        return {coeff, exp};
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

unsigned long qdegree(const QPoly& p) {
    unsigned long d = 0;
    for (const auto& [e, c] : p)
        if (c != 0 && e > d) d = e;
    return d;
}

bool qnonzero(const QPoly& p) {
    for (const auto& [e, c] : p)
        if (c != 0) return true;
    return false;
}

std::string join_primes(const std::vector<BigInt>& primes) {
    std::ostringstream os;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i) os << ", ";
        os << primes[i].get_str();
    }
    return os.str();
}

MapExpr finish_map(std::string source, const QPoly& num, const QPoly& den) {
    std::vector<std::string> warnings;
    if (!qnonzero(den)) throw NotAMorphismError(); // zero denominator
    if (!qnonzero(num)) throw DegreeZeroError();   // the constant zero map
    const unsigned long d = std::max(qdegree(num), qdegree(den));
    if (d == 0) throw DegreeZeroError();
    // Common denominator across all coefficients of both forms.
    BigInt lcm_den(1);
    for (const QPoly* p : {&num, &den})
        for (const auto& [e, c] : *p)
            if (c != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    auto homogenize = [&](const QPoly& p) {
        std::vector<BigInt> coeffs(d + 1, BigInt(0));
        for (const auto& [e, c] : p) {
            if (c == 0) continue;
            mpq_class scaled = c * mpq_class(lcm_den);
            coeffs[e] = scaled.get_num(); // exact: lcm clears the denominator
        }
        return BinForm(std::move(coeffs));
    };
    BinForm f = homogenize(num), g = homogenize(den);
    if (lcm_den > 1)
        warnings.push_back("cleared denominators (scaled by " + lcm_den.get_str() +
                           "; primes: " + join_primes(prime_factors(lcm_den)) + ")");
    MapP1 map(std::move(f), std::move(g));
    BigInt cf = map.numerator().content(), cg = map.denominator().content();
    for (const auto& q : prime_factors(cf))
        warnings.push_back("bad reduction guaranteed at " + q.get_str() +
                           " (divides every numerator coefficient)");
    for (const auto& q : prime_factors(cg))
        warnings.push_back("bad reduction guaranteed at " + q.get_str() +
                           " (divides every denominator coefficient)");
    return MapExpr{std::move(source), std::move(map), std::move(warnings)};
}

} // namespace

MapExpr parse_map(const std::string& text) {
    if (text.empty()) throw ParseError("empty map expression", 0);
    Parser parser(text);
    auto [num, den] = parser.parse_map_level();
    return finish_map(text, num, den);
}

MapExpr parse_forms(const std::string& text) {
    std::size_t semi = text.find(';');
    if (semi == std::string::npos)
        throw ParseError("expected \"F;G\" coefficient lists separated by ';'", text.size());
    auto parse_list = [&](const std::string& part, std::size_t base) {
        std::vector<BigInt> coeffs;
        std::istringstream is(part);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            std::size_t a = tok.find_first_not_of(" \t");
            std::size_t b = tok.find_last_not_of(" \t");
            if (a == std::string::npos) throw ParseError("empty coefficient", base);
            try {
                coeffs.emplace_back(tok.substr(a, b - a + 1));
            } catch (const std::invalid_argument&) {
                throw ParseError("bad integer coefficient '" + tok + "'", base);
            }
        }
        if (coeffs.empty()) throw ParseError("empty coefficient list", base);
        return coeffs;
    };
    std::vector<BigInt> fc = parse_list(text.substr(0, semi), 0);
    std::vector<BigInt> gc = parse_list(text.substr(semi + 1), semi + 1);
    if (fc.size() != gc.size())
        throw ParseError("form coefficient lists must have equal length", semi);
    MapP1 map(BinForm(std::move(fc)), BinForm(std::move(gc)));
    std::vector<std::string> warnings;
    for (const auto& q : prime_factors(map.numerator().content()))
        warnings.push_back("bad reduction guaranteed at " + q.get_str() +
                           " (divides every numerator coefficient)");
    for (const auto& q : prime_factors(map.denominator().content()))
        warnings.push_back("bad reduction guaranteed at " + q.get_str() +
                           " (divides every denominator coefficient)");
    return MapExpr{text, std::move(map), std::move(warnings)};
}

IntPoly parse_int_poly(const std::string& text) {
    if (text.empty()) throw ParseError("empty polynomial", 0);
    Parser parser(text);
    QPoly q = parser.parse_poly_whole();
    unsigned long d = qdegree(q);
    std::vector<BigInt> coeffs(d + 1, BigInt(0));
    for (const auto& [e, c] : q) {
        if (c == 0) continue;
        if (c.get_den() != 1)
            throw ParseError("integer coefficients required", 0);
        coeffs[e] = c.get_num();
    }
    return IntPoly(std::move(coeffs));
}

std::string print_int_poly(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        const BigInt& c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str();
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string print_map(const MapP1& f) {
    IntPoly num = f.numerator().dehomogenize_x();
    IntPoly den = f.denominator().dehomogenize_x();
    if (den.degree() == 0 && den.coeff(0) == 1) // G = Z^d exactly
        return print_int_poly(num);
    return "(" + print_int_poly(num) + ")/(" + print_int_poly(den) + ")";
}

} // namespace padicdyn
