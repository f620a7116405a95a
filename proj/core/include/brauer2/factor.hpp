#pragma once

#include "brauer2/poly.hpp"
#include "brauer2/rational.hpp"

#include <utility>
#include <vector>

namespace brauer2 {

using QPoly = Poly<Rational>;

struct Factor {
    QPoly factor;     // monic irreducible over Q
    int multiplicity; // >= 1

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Complete factorization over Q: p = lc(p) * prod factor^multiplicity.
/// Factors are sorted canonically (degree, then coefficients). Throws
/// InvalidArgument on the zero polynomial; a nonzero constant yields an
/// empty list.
///
/// Squarefree decomposition, then a modular factorization at a small prime,
/// multifactor Hensel lifting past the Mignotte bound and subset
/// recombination.
std::vector<Factor> factor_over_rationals(const QPoly& p);

/// Irreducibility over Q for a nonzero polynomial of positive degree.
bool is_irreducible(const QPoly& p);

/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of p.
std::vector<Integer> primitive_integer_part(const QPoly& p);

QPoly from_integers(const std::vector<Integer>& coeffs);

/// Interpolating polynomial through (xs[i], ys[i]), xs distinct.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Multiplies factors back out (times the given constant).
QPoly expand(const std::vector<Factor>& factors, const Rational& constant = 1);

} // namespace brauer2
