#pragma once

#include "brauer2/etale.hpp"

#include <string>
#include <vector>

namespace brauer2 {

/// Where an expression starts in its source, for error positions.
struct SourcePos {
    int line = 1;
    int column = 1;
};

/// A fraction num/den of polynomials in one variable X over K; den monic
/// and coprime to num.
struct XFraction {
    KPoly num;
    KPoly den;
};

/// Parses an expression over integers and rationals in the variable t and
/// the polynomial variable (any name in xvars) with + - * / ^ and
/// parentheses. Exponents are integer literals; negative ones need an
/// invertible base. Throws SyntaxError with the line and column.
XFraction parse_x_fraction(const std::string& text, const std::vector<std::string>& xvars,
                           const std::string& tvar = "t", SourcePos at = {});

/// A polynomial in x over K (division only by elements of K).
KPoly parse_xt(const std::string& text, const std::string& xvar = "x",
               const std::string& tvar = "t", SourcePos at = {});

/// An element of K written in tvar.
RationalFunction parse_t(const std::string& text, const std::string& tvar = "t",
                         SourcePos at = {});

/// "inf", "infinity", or an irreducible polynomial in t such as "(t-5)".
PlaceK parse_place(const std::string& text, SourcePos at = {});

/// A comma-separated list of places.
std::vector<PlaceK> parse_place_list(const std::string& text, SourcePos at = {});

/// "(d1; d2; d3; d4)" in Split form (L must be split), or a polynomial in A
/// (also written alpha) reduced modulo f.
EtaleElement parse_element(const std::string& text, const EtaleAlgebra& L, SourcePos at = {});

} // namespace brauer2
