#include "brauer2/number_field.hpp"

#include <algorithm>

namespace brauer2 {

namespace {

Rational shift_value(int k)
{
    // 0, 1, -1, 2, -2, ...
    return (k % 2 == 1) ? Rational((k + 1) / 2) : Rational(-(k / 2));
}

} // namespace

NumberFieldPtr make_number_field(const QPoly& modulus, const std::string& generator, bool check)
{
    if (modulus.degree() < 1)
        throw InvalidArgument("number field modulus must have positive degree");
    if (check && !is_irreducible(modulus))
        throw InvalidArgument("number field modulus " + to_string(modulus, generator)
                              + " is not irreducible");
    return std::make_shared<const NumberField>(NumberField{monic(modulus), generator});
}

NfPoly to_nf_poly(const QPoly& p, const NumberFieldPtr& field)
{
    std::vector<NfElem> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        v.emplace_back(field, QPoly(c));
    return NfPoly(std::move(v));
}

Rational norm(const NfElem& e, const NumberFieldPtr& field)
{
    return resultant(field->modulus, e.rep());
}

QPoly norm(const NfPoly& p, const NumberFieldPtr& field)
{
    if (p.is_zero())
        return {};
    const std::size_t degree = static_cast<std::size_t>(field->degree() * p.degree());
    std::vector<Rational> xs, ys;
    for (std::size_t i = 0; i <= degree; ++i) {
        const NfElem z(field, QPoly(Rational(static_cast<long>(i))));
        xs.emplace_back(static_cast<long>(i));
        ys.push_back(resultant(field->modulus, p.evaluate<NfElem>(z).rep()));
    }
    return interpolate(xs, ys);
}

std::vector<std::pair<NfPoly, int>> factor_over_number_field(const NfPoly& p,
                                                             const NumberFieldPtr& field)
{
    if (p.is_zero())
        throw InvalidArgument("factor_over_number_field: zero polynomial");
    std::vector<std::pair<NfPoly, int>> out;
    if (p.degree() <= 0)
        return out;

    if (field->degree() == 1) {
        std::vector<Rational> v;
        for (const auto& c : p.coeffs())
            v.push_back(c.base_value());
        for (const auto& f : factor_over_rationals(QPoly(std::move(v))))
            out.emplace_back(to_nf_poly(f.factor, field), f.multiplicity);
    } else {
        const NfElem u = NfElem::generator(field);
        for (const auto& [g, mult] : squarefree_decomposition(p)) {
            if (g.degree() == 1) {
                out.emplace_back(g, mult);
                continue;
            }
            NfPoly shifted;
            QPoly n;
            NfElem s;
            for (int k = 0;; ++k) {
                s = NfElem(field, QPoly(shift_value(k))) * u;
                shifted = compose(g, NfPoly(std::vector<NfElem>{-s, NfElem(1)}));
                n = norm(shifted, field);
                if (gcd(n, derivative(n)).degree() == 0)
                    break;
            }
            const auto norm_factors = factor_over_rationals(n);
            if (norm_factors.size() == 1) {
                out.emplace_back(g, mult);
                continue;
            }
            const NfPoly back(std::vector<NfElem>{s, NfElem(1)});
            for (const auto& nf : norm_factors) {
                NfPoly h = gcd(shifted, to_nf_poly(nf.factor, field));
                if (h.degree() > 0)
                    out.emplace_back(monic(compose(h, back)), mult);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const int c = canonical_compare(a.first, b.first);
        return c != 0 ? c < 0 : a.second < b.second;
    });
    return out;
}

SquareTest is_square_in_number_field(const NfElem& e, const NumberFieldPtr& field)
{
    if (e.is_zero())
        throw InvalidArgument("is_square_in_number_field: zero element");
    if (e.is_base() && is_square(e.base_value()))
        return {true, NfElem(field, QPoly(exact_sqrt(e.base_value())))};
    if (field->degree() == 1)
        return {false, std::nullopt};
    const NfPoly z2(std::vector<NfElem>{-e.with_field(field), NfElem(0), NfElem(1)});
    for (const auto& [g, m] : factor_over_number_field(z2, field)) {
        if (g.degree() == 1)
            return {true, -g.coeff(0)};
    }
    return {false, std::nullopt};
}

} // namespace brauer2
