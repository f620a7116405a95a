#pragma once

#include "brauer2/etale.hpp"

#include <vector>

namespace brauer2 {

/// A rational parametrization of the component curve Z_i : factor(x, t) = 0,
/// given by t = phi(w), x = psi(w), with inverse w = chi_num(x) / chi_den(x)
/// (polynomials in x over K). Rational functions in w reuse RationalFunction.
struct ComponentParametrization {
    KPoly factor;
    RationalFunction phi;
    RationalFunction psi;
    KPoly chi_num;
    KPoly chi_den;
};

/// The linear component x - a(t): w = t.
ComponentParametrization linear_component(const RationalFunction& root);

/// Checks factor(psi, phi) = 0, chi(phi, psi) = w and that phi has degree
/// deg_x(factor); throws InvalidArgument otherwise.
void validate_component(const ComponentParametrization& c);

/// Orders classes canonically (form, then coordinates).
int canonical_compare(const EtaleElement& a, const EtaleElement& b);

/// The classes of (ker N)_{S-unr}, sorted. Geometric mode only. Split f
/// needs no components; otherwise every non-linear K-irreducible factor of
/// f must be covered by a supplied parametrization.
std::vector<KernelClass> enumerate_unramified_kernel(
    const EtaleAlgebra& L, const BadPlaceSet& S, Mode mode = Mode::geometric,
    const std::vector<ComponentParametrization>& components = {});

/// Same enumeration, always through the component machinery (linear
/// components are generated from the roots of f).
std::vector<KernelClass> enumerate_by_components(
    const EtaleAlgebra& L, const BadPlaceSet& S,
    const std::vector<ComponentParametrization>& components);

} // namespace brauer2
