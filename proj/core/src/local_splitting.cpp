#include "brauer2/places.hpp"

#include <algorithm>

namespace brauer2 {

namespace {

RelSeries series_of(const NfPoly& q, int precision)
{
    std::vector<RelElem> v(static_cast<std::size_t>(precision));
    for (int k = 0; k < precision && k <= q.degree(); ++k)
        v[static_cast<std::size_t>(k)] = RelElem(q.coeff(static_cast<std::size_t>(k)));
    return RelSeries(std::move(v), 0);
}

std::vector<RelSeries> series_of(const std::vector<NfPoly>& qs, int precision)
{
    std::vector<RelSeries> out;
    out.reserve(qs.size());
    for (const auto& q : qs)
        out.push_back(series_of(q, precision));
    return out;
}

// Newton iteration for a root of the shifted model; x is correct modulo
// s^{x.precision()} on entry.
RelSeries newton_lift(const LocalModel& m, RelSeries x, int target)
{
    std::vector<NfPoly> deriv;
    for (std::size_t i = 1; i < m.shifted.size(); ++i)
        deriv.push_back(m.shifted[i] * NfElem(static_cast<int>(i)));
    while (x.precision() < target) {
        const int p = std::min(2 * x.precision(), target);
        x = x.padded(p);
        const RelSeries value = evaluate_series(series_of(m.shifted, p), x);
        const RelSeries slope = evaluate_series(series_of(deriv, p), x);
        x = (x - value * slope.inverse()).truncated(p);
    }
    return x;
}

std::vector<NfPoly> shifted_numerators(const KPoly& p, const QPoly& denominator,
                                       const NumberFieldPtr& kappa)
{
    std::vector<NfPoly> out;
    const RationalFunction d(denominator);
    for (const auto& c : p.coeffs())
        out.push_back(taylor_shift((c * d).num(), kappa));
    return out;
}

} // namespace

LocalModelPtr local_model(const KPoly& f, const PlaceK& t0, int cap)
{
    if (t0.is_infinity())
        throw BadReduction("no local splitting at infinity (infinity is always in S)");
    const QPoly d = common_denominator(f);
    if (divides(t0.poly(), d))
        throw BadReduction("f has a pole at " + t0.to_string());
    NfPoly reduction = reduce_poly_at(f, t0);
    if (reduction.degree() != f.degree())
        throw BadReduction("f drops degree modulo " + t0.to_string());
    if (gcd(reduction, derivative(reduction)).degree() > 0)
        throw BadReduction("f is inseparable modulo " + t0.to_string());
    auto shifted = shifted_numerators(f, d, t0.residue_field());
    auto m = std::make_shared<const LocalModel>(
        LocalModel{f, t0, d, std::move(shifted), std::move(reduction), cap});
    return m;
}

LocalPoint LocalPoint::lifted_to(int precision) const
{
    if (precision <= root_.precision())
        return *this;
    if (precision > model_->cap)
        throw PrecisionCap("lifting to order " + std::to_string(precision)
                           + " exceeds the precision cap " + std::to_string(model_->cap));
    return LocalPoint(model_, factor_, field_, newton_lift(*model_, root_, precision));
}

std::vector<LocalPoint> local_splitting(const KPoly& f, const PlaceK& t0, int precision, int cap)
{
    if (precision > cap)
        throw PrecisionCap("requested precision " + std::to_string(precision)
                           + " exceeds the cap " + std::to_string(cap));
    LocalModelPtr m = local_model(f, t0, cap);
    std::vector<LocalPoint> out;
    for (const auto& [g, mult] : factor_over_number_field(m->reduction, t0.residue_field())) {
        (void)mult;
        auto field = std::make_shared<const RelField>(RelField{g, "theta"});
        RelSeries x0(std::vector<RelElem>{RelElem::generator(field)}, 0);
        out.emplace_back(m, g, field, newton_lift(*m, std::move(x0), std::max(precision, 1)));
    }
    return out;
}

std::vector<LocalPoint> local_splitting(const KPoly& f, const PlaceK& t0, const BadPlaceSet& S,
                                        int precision, int cap)
{
    if (S.contains(t0))
        throw BadReduction(t0.to_string() + " lies in S");
    return local_splitting(f, t0, precision, cap);
}

int valuation_of_ell_at_point(const KPoly& ell, const LocalPoint& P)
{
    if (ell.is_zero())
        throw InvalidArgument("valuation of the zero element");
    const LocalModel& m = *P.model();
    if (resultant_K(m.f, ell).is_zero()) {
        const NfPoly common = reduce_poly_at(gcd(m.f, ell), m.place);
        if (divides(P.residue_factor(), common))
            throw ZeroDivisor("element vanishes on the component through this point");
    }
    const QPoly d = common_denominator(ell);
    const int vd = valuation_at(d, m.place);
    const auto nums = shifted_numerators(ell, d, m.place.residue_field());

    int prec = std::max(P.precision(), kInitialPrecision);
    while (true) {
        prec = std::min(prec, m.cap);
        const LocalPoint Q = P.lifted_to(prec);
        const RelSeries value = evaluate_series(series_of(nums, prec), Q.root());
        if (auto o = value.order())
            return *o - vd;
        if (prec >= m.cap)
            throw PrecisionCap("valuation undetermined at the precision cap "
                               + std::to_string(m.cap));
        prec *= 2;
    }
}

} // namespace brauer2
