#include "brauer2/enumerate.hpp"

#include "brauer2/factor.hpp"

#include <algorithm>
#include <cstdint>

namespace brauer2 {

namespace {

using Bits = std::vector<std::uint8_t>;

struct Echelon {
    std::vector<Bits> rows;
    std::vector<std::size_t> pivots;
};

void add_into(Bits& a, const Bits& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] ^= b[i];
}

Bits reduce(Bits v, const Echelon& e)
{
    for (std::size_t r = 0; r < e.rows.size(); ++r)
        if (v[e.pivots[r]])
            add_into(v, e.rows[r]);
    return v;
}

Echelon echelon(const std::vector<Bits>& vectors)
{
    Echelon e;
    for (Bits v : vectors) {
        v = reduce(std::move(v), e);
        auto it = std::find(v.begin(), v.end(), 1);
        if (it == v.end())
            continue;
        const std::size_t p = static_cast<std::size_t>(it - v.begin());
        for (auto& row : e.rows)
            if (row[p])
                add_into(row, v);
        e.rows.push_back(std::move(v));
        e.pivots.push_back(p);
    }
    return e;
}

// Basis of {x : <c, x> = 0 for every constraint c}.
std::vector<Bits> nullspace(const std::vector<Bits>& constraints, std::size_t n)
{
    const Echelon e = echelon(constraints);
    std::vector<std::uint8_t> is_pivot(n, 0);
    for (auto p : e.pivots)
        is_pivot[p] = 1;
    std::vector<Bits> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        Bits x(n, 0);
        x[free] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r)
            x[e.pivots[r]] = e.rows[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

int multiplicity(QPoly p, const QPoly& q)
{
    int n = 0;
    while (!p.is_zero() && divides(q, p)) {
        p = p / q;
        ++n;
    }
    return n;
}

int multiplicity(const RationalFunction& r, const QPoly& q)
{
    return multiplicity(r.num(), q) - multiplicity(r.den(), q);
}

int map_degree(const RationalFunction& phi)
{
    return std::max(phi.num().degree(), phi.den().degree());
}

RationalFunction substitute(const KPoly& p, const RationalFunction& phi, const RationalFunction& psi)
{
    RationalFunction acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * psi + it->compose(phi);
    return acc;
}

KPoly constant_poly(const QPoly& q)
{
    std::vector<RationalFunction> v;
    for (const auto& c : q.coeffs())
        v.emplace_back(c);
    return KPoly(std::move(v));
}

KPoly inverse_mod(const KPoly& a, const KPoly& m)
{
    auto r = xgcd(a % m, m);
    if (r.g.degree() != 0)
        throw InvalidArgument("internal: element not invertible modulo a component");
    return r.s % m;
}

struct Generator {
    std::size_t component;
    QPoly q;
};

struct Component {
    ComponentParametrization param;
    KPoly monic_factor;
    std::vector<QPoly> places; // finite w-places over S
    bool infinity_over_S = false;
};

// ell(chi(alpha)) in K[x]/(factor) for ell a polynomial in w.
KPoly evaluate_on_component(const QPoly& ell, const Component& c)
{
    const KPoly& m = c.monic_factor;
    const int d = ell.degree();
    const KPoly cn = c.param.chi_num % m;
    const KPoly cd = c.param.chi_den % m;
    KPoly num;
    for (int k = 0; k <= d; ++k) {
        const Rational& a = ell.coeffs()[static_cast<std::size_t>(k)];
        if (sgn(a) == 0)
            continue;
        num += (pow(cn, static_cast<unsigned>(k)) * pow(cd, static_cast<unsigned>(d - k)) % m)
            * RationalFunction(a);
    }
    return (num * inverse_mod(pow(cd, static_cast<unsigned>(d)) % m, m)) % m;
}

RationalFunction norm_down(const QPoly& q, const RationalFunction& phi)
{
    // P_t(w) = num phi(w) - t den phi(w)
    const int n = map_degree(phi);
    std::vector<RationalFunction> coeffs(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k)
        coeffs[static_cast<std::size_t>(k)] = RationalFunction(phi.num().coeff(static_cast<std::size_t>(k)))
            - RationalFunction::t() * RationalFunction(phi.den().coeff(static_cast<std::size_t>(k)));
    const KPoly P(std::move(coeffs));
    RationalFunction r = resultant_K(P, constant_poly(q));
    for (int k = 0; k < q.degree(); ++k)
        r = r / P.leading();
    return r;
}

std::vector<KernelClass> enumerate_split(const EtaleAlgebra& L, const BadPlaceSet& S)
{
    const auto gens = S.finite_places();
    const std::size_t m = gens.size();
    auto product = [&](std::uint64_t mask) {
        QPoly acc(Rational(1));
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1U)
                acc = acc * gens[i].poly();
        return RationalFunction(acc);
    };
    std::vector<KernelClass> out;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << m); ++a)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
            const auto e = EtaleElement::split({1, product(a), product(b), product(a ^ b)});
            out.push_back(make_kernel_class(e, L, Mode::geometric));
        }
    return out;
}

void sort_classes(std::vector<KernelClass>& v)
{
    std::sort(v.begin(), v.end(), [](const KernelClass& a, const KernelClass& b) {
        return canonical_compare(a.representative(), b.representative()) < 0;
    });
}

} // namespace

ComponentParametrization linear_component(const RationalFunction& root)
{
    return {KPoly(std::vector<RationalFunction>{-root, RationalFunction(1)}), RationalFunction::t(),
            root, KPoly(RationalFunction::t()), KPoly(RationalFunction(1))};
}

void validate_component(const ComponentParametrization& c)
{
    const int d = c.factor.degree();
    if (d < 1)
        throw InvalidArgument("component factor must have positive degree in x");
    if (map_degree(c.phi) != d)
        throw InvalidArgument("phi has degree " + std::to_string(map_degree(c.phi))
                              + " but the factor has degree " + std::to_string(d));
    if (!substitute(c.factor, c.phi, c.psi).is_zero())
        throw InvalidArgument("factor(psi(w), phi(w)) is not identically zero");
    const RationalFunction den = substitute(c.chi_den, c.phi, c.psi);
    if (den.is_zero() || substitute(c.chi_num, c.phi, c.psi) / den != RationalFunction::t())
        throw InvalidArgument("chi(phi(w), psi(w)) is not w");
}

int canonical_compare(const EtaleElement& a, const EtaleElement& b)
{
    if (a.form() != b.form())
        return a.form() == EtaleElement::Form::split ? -1 : 1;
    for (std::size_t i = 0; i < 4; ++i) {
        const std::size_t k = a.is_split() ? i : 3 - i;
        const int c = canonical_compare(a[k], b[k]);
        if (c != 0)
            return c;
    }
    return 0;
}

std::vector<KernelClass> enumerate_by_components(
    const EtaleAlgebra& L, const BadPlaceSet& S,
    const std::vector<ComponentParametrization>& components)
{
    std::vector<Component> comps;
    KPoly product(RationalFunction(1));
    for (const auto& p : components) {
        validate_component(p);
        comps.push_back({p, p.factor * p.factor.leading().inverse(), {}, false});
        product = product * comps.back().monic_factor;
    }
    for (const auto& a : roots_in_K(L.f())) {
        const bool covered = std::any_of(comps.begin(), comps.end(), [&](const Component& c) {
            return c.param.factor.evaluate<RationalFunction>(a).is_zero();
        });
        if (covered)
            continue;
        auto p = linear_component(a);
        comps.push_back({p, p.factor, {}, false});
        product = product * p.factor;
    }
    if (product.degree() < 4 && divides(product, L.monic_f()))
        throw UnsupportedGeometry("a component of degree " + std::to_string(4 - product.degree())
                                  + " has no rational parametrization");
    if (product != L.monic_f())
        throw InvalidArgument("component factors do not multiply to f");

    const auto finite = S.finite_places();
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        auto& c = comps[i];
        QPoly support = c.param.phi.den();
        for (const auto& s : finite)
            support = support * s.poly().evaluate<RationalFunction>(c.param.phi).num();
        if (support.degree() > 0)
            for (const auto& fac : factor_over_rationals(support))
                c.places.push_back(fac.factor);
        if (c.param.phi.num().degree() > c.param.phi.den().degree()) {
            c.infinity_over_S = true;
        } else {
            const Rational at_inf = c.param.phi.num().degree() == c.param.phi.den().degree()
                ? Rational(c.param.phi.num().leading() / c.param.phi.den().leading())
                : Rational(0);
            c.infinity_over_S = S.contains(PlaceK::at(at_inf));
        }
        for (const auto& q : c.places)
            gens.push_back({i, q});
    }
    const std::size_t n = gens.size();

    std::vector<Bits> constraints;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].infinity_over_S)
            continue;
        Bits row(n, 0);
        for (std::size_t j = 0; j < n; ++j)
            if (gens[j].component == i)
                row[j] = static_cast<std::uint8_t>(gens[j].q.degree() % 2);
        constraints.push_back(std::move(row));
    }
    std::vector<RationalFunction> norms;
    for (const auto& g : gens)
        norms.push_back(norm_down(g.q, comps[g.component].param.phi));
    for (const auto& s : finite) {
        Bits row(n, 0);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = static_cast<std::uint8_t>(std::abs(valuation_at(norms[j], s)) % 2);
        constraints.push_back(std::move(row));
    }

    std::vector<Bits> diagonal;
    for (const auto& s : finite) {
        Bits v(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            const auto r = s.poly().evaluate<RationalFunction>(comps[gens[j].component].param.phi);
            v[j] = static_cast<std::uint8_t>(std::abs(multiplicity(r, gens[j].q)) % 2);
        }
        diagonal.push_back(std::move(v));
    }
    const Echelon D = echelon(diagonal);
    std::vector<Bits> reduced;
    for (const auto& h : nullspace(constraints, n))
        reduced.push_back(reduce(h, D));
    const Echelon Q = echelon(reduced);
    const std::size_t r = Q.rows.size();
    if (r > 20)
        throw UnsupportedGeometry("enumeration would produce 2^" + std::to_string(r) + " classes");

    // CRT idempotent-style lifts e_i = M_i (M_i^{-1} mod f_i)
    std::vector<KPoly> lifts;
    for (const auto& c : comps) {
        const KPoly M = L.monic_f() / c.monic_factor;
        lifts.push_back(M * inverse_mod(M, c.monic_factor));
    }

    std::vector<KernelClass> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        Bits e(n, 0);
        for (std::size_t k = 0; k < r; ++k)
            if (mask >> k & 1U)
                add_into(e, Q.rows[k]);
        KPoly ell;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            QPoly w(Rational(1));
            for (std::size_t j = 0; j < n; ++j)
                if (gens[j].component == i && e[j])
                    w = w * gens[j].q;
            ell += evaluate_on_component(w, comps[i]) * lifts[i];
        }
        out.push_back(make_kernel_class(EtaleElement::from_poly(ell, L), L, Mode::geometric));
    }
    sort_classes(out);
    return out;
}

std::vector<KernelClass> enumerate_unramified_kernel(
    const EtaleAlgebra& L, const BadPlaceSet& S, Mode mode,
    const std::vector<ComponentParametrization>& components)
{
    if (mode == Mode::strict)
        throw UnsupportedGeometry("enumeration is only available in geometric mode");
    if (L.is_split() && components.empty()) {
        auto out = enumerate_split(L, S);
        sort_classes(out);
        return out;
    }
    return enumerate_by_components(L, S, components);
}

} // namespace brauer2
