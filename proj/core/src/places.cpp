#include "brauer2/places.hpp"

#include "brauer2/factor.hpp"

#include <algorithm>

namespace brauer2 {

PlaceK PlaceK::infinity()
{
    static const NumberFieldPtr q = make_number_field(QPoly::variable(), "u", false);
    return PlaceK(true, QPoly{}, q);
}

PlaceK PlaceK::finite(const QPoly& pi)
{
    if (pi.degree() < 1)
        throw InvalidArgument("a place needs a polynomial of positive degree");
    QPoly m = monic(pi);
    auto kappa = make_number_field(m, "u", true);
    return PlaceK(false, std::move(m), std::move(kappa));
}

PlaceK PlaceK::at(const Rational& c)
{
    QPoly m(std::vector<Rational>{-c, Rational(1)});
    auto kappa = make_number_field(m, "u", false);
    return PlaceK(false, std::move(m), std::move(kappa));
}

const QPoly& PlaceK::poly() const
{
    if (infinite_)
        throw InvalidArgument("the place at infinity has no polynomial");
    return pi_;
}

RationalFunction PlaceK::uniformizer() const
{
    if (infinite_)
        return RationalFunction::t().inverse();
    return RationalFunction(pi_);
}

std::string PlaceK::to_string() const
{
    if (infinite_)
        return "inf";
    return "(" + brauer2::to_string(pi_, "t") + ")";
}

bool operator<(const PlaceK& a, const PlaceK& b)
{
    if (a.infinite_ != b.infinite_)
        return b.infinite_;
    if (a.infinite_)
        return false;
    return canonical_compare(a.pi_, b.pi_) < 0;
}

int valuation_at(const QPoly& p, const PlaceK& v)
{
    if (p.is_zero())
        throw InvalidArgument("valuation of zero");
    if (v.is_infinity())
        return -p.degree();
    int n = 0;
    QPoly q = p;
    while (true) {
        auto [quo, rem] = divmod(q, v.poly());
        if (!rem.is_zero())
            return n;
        q = std::move(quo);
        ++n;
    }
}

int valuation_at(const RationalFunction& r, const PlaceK& v)
{
    if (r.is_zero())
        throw InvalidArgument("valuation of zero");
    return valuation_at(r.num(), v) - valuation_at(r.den(), v);
}

NfElem reduce_at(const RationalFunction& r, const PlaceK& v)
{
    if (r.is_zero())
        return NfElem{};
    if (valuation_at(r, v) != 0)
        throw InvalidArgument("reduce_at: element is not a unit at " + v.to_string());
    const auto& kappa = v.residue_field();
    if (v.is_infinity())
        return NfElem(kappa, QPoly(r.num().leading() / r.den().leading()));
    return NfElem(kappa, r.num()) / NfElem(kappa, r.den());
}

NfElem leading_residue(const RationalFunction& r, const PlaceK& v)
{
    if (r.is_zero())
        throw InvalidArgument("leading residue of zero");
    const auto& kappa = v.residue_field();
    if (v.is_infinity())
        return NfElem(kappa, QPoly(r.num().leading() / r.den().leading()));
    QPoly num = r.num();
    QPoly den = r.den();
    while (divides(v.poly(), num))
        num = num / v.poly();
    while (divides(v.poly(), den))
        den = den / v.poly();
    return NfElem(kappa, num) / NfElem(kappa, den);
}

std::vector<PlaceK> zeros_of(const QPoly& p)
{
    std::vector<PlaceK> out;
    for (const auto& fac : factor_over_rationals(p))
        out.push_back(fac.factor.degree() == 1 ? PlaceK::at(-fac.factor.coeff(0))
                                               : PlaceK::finite(fac.factor));
    std::sort(out.begin(), out.end());
    return out;
}

BadPlaceSet::BadPlaceSet() : places_{PlaceK::infinity()} {}

void BadPlaceSet::add(const PlaceK& v)
{
    auto it = std::lower_bound(places_.begin(), places_.end(), v);
    if (it != places_.end() && *it == v)
        return;
    places_.insert(it, v);
}

bool BadPlaceSet::contains(const PlaceK& v) const
{
    return std::binary_search(places_.begin(), places_.end(), v);
}

std::vector<PlaceK> BadPlaceSet::finite_places() const
{
    std::vector<PlaceK> out;
    for (const auto& v : places_)
        if (!v.is_infinity())
            out.push_back(v);
    return out;
}

void validate_model(const KPoly& f)
{
    if (f.degree() != 4)
        throw DegenerateModel("the model needs deg_x f = 4, got degree "
                              + std::to_string(f.degree()));
    if (discriminant_K(f).is_zero())
        throw DegenerateModel("disc_x f = 0: f is not squarefree in x");
}

BadPlaceSet compute_bad_places(const KPoly& f)
{
    validate_model(f);
    const RationalFunction disc = discriminant_K(f);
    const QPoly support = disc.num() * f.leading().num() * common_denominator(f);
    BadPlaceSet s;
    if (support.degree() > 0)
        for (const auto& v : zeros_of(support))
            s.add(v);
    return s;
}

NfPoly reduce_poly_at(const KPoly& f, const PlaceK& v)
{
    std::vector<NfElem> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) {
        if (a.is_zero()) {
            c.emplace_back();
            continue;
        }
        if (valuation_at(a, v) < 0)
            throw BadReduction("coefficient " + to_string(a) + " has a pole at " + v.to_string());
        c.push_back(valuation_at(a, v) > 0 ? NfElem{} : reduce_at(a, v));
    }
    return NfPoly(std::move(c));
}

NfPoly taylor_shift(const QPoly& p, const NumberFieldPtr& kappa)
{
    const NfPoly shift(std::vector<NfElem>{NfElem::generator(kappa), NfElem(1)});
    return compose(to_nf_poly(p, kappa), shift);
}

} // namespace brauer2
