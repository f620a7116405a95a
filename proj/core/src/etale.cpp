#include "brauer2/etale.hpp"

#include <algorithm>
#include <mutex>

namespace brauer2 {

namespace {

using RelPoly = Poly<RelElem>;

Rational small_integer(int k)
{
    return (k % 2 == 1) ? Rational((k + 1) / 2) : Rational(-(k / 2));
}

RelPoly to_rel(const NfPoly& p)
{
    std::vector<RelElem> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        v.emplace_back(c);
    return RelPoly(std::move(v));
}

RelPoly truncate(const RelPoly& p, int n)
{
    std::vector<RelElem> v(p.coeffs().begin(),
                           p.coeffs().begin() + std::min<std::ptrdiff_t>(n, p.degree() + 1));
    return RelPoly(std::move(v));
}

struct LiftedRoot {
    bool exact;
    QPoly scaled; // a(t) * root, when the residue factor is linear
};

// Exact roots of f over constant extensions of K, one entry per residue
// factor at a good integer place. `linear_only` restricts to Q(t).
std::vector<LiftedRoot> exact_roots(const KPoly& f, bool linear_only)
{
    const int n = f.degree();
    if (n < 1)
        throw InvalidArgument("root search needs a polynomial of positive degree");
    const QPoly d = common_denominator(f);
    std::vector<QPoly> F;
    for (const auto& c : f.coeffs())
        F.push_back((c * RationalFunction(d)).num());
    int bound = 0;
    for (const auto& c : F)
        bound = std::max(bound, c.degree());
    bound += F.back().degree();

    for (int k = 0;; ++k) {
        const Rational c = small_integer(k);
        const PlaceK v = PlaceK::at(c);
        std::vector<LocalPoint> points;
        try {
            const int prec = bound + 1;
            points = local_splitting(f, v, prec, std::max(prec, kDefaultPrecisionCap));
        } catch (const BadReduction&) {
            continue;
        }
        const auto& kappa = v.residue_field();
        std::vector<RelPoly> Fs;
        for (const auto& p : F)
            Fs.push_back(to_rel(taylor_shift(p, kappa)));
        const RelPoly& a = Fs.back();

        std::vector<LiftedRoot> out;
        for (const auto& P : points) {
            if (linear_only && P.residue_factor().degree() != 1)
                continue;
            std::vector<RelElem> xs;
            for (int j = 0; j <= bound; ++j)
                xs.push_back(P.root().coeff(j));
            const RelPoly z = truncate(a * RelPoly(std::move(xs)), bound + 1);
            // a^{n-1} f(z/a) = z^n + sum_{i<n} F_i a^{n-1-i} z^i
            RelPoly acc = pow(z, static_cast<unsigned>(n));
            for (int i = 0; i < n; ++i)
                acc += Fs[static_cast<std::size_t>(i)] * pow(a, static_cast<unsigned>(n - 1 - i))
                    * pow(z, static_cast<unsigned>(i));
            LiftedRoot r{acc.is_zero(), {}};
            if (r.exact && P.residue_factor().degree() == 1) {
                std::vector<Rational> zc;
                for (const auto& e : z.coeffs())
                    zc.push_back(e.base_value().base_value());
                r.scaled = compose(QPoly(std::move(zc)), QPoly(std::vector<Rational>{-c, Rational(1)}));
            }
            out.push_back(std::move(r));
        }
        return out;
    }
}

RationalFunction evaluate_k(const KPoly& p, const RationalFunction& x)
{
    return p.evaluate<RationalFunction>(x);
}

std::string residue_label(const RationalFunction& root, const PlaceK& t0)
{
    const KPoly lin(std::vector<RationalFunction>{-root, RationalFunction(1)});
    return to_string(reduce_poly_at(lin, t0), "x");
}

} // namespace

std::vector<RationalFunction> roots_in_K(const KPoly& f)
{
    const QPoly a = common_denominator(f);
    std::vector<RationalFunction> out;
    const RationalFunction lc = f.leading() * RationalFunction(a);
    for (const auto& r : exact_roots(f, true))
        if (r.exact)
            out.push_back(RationalFunction(r.scaled) / lc);
    std::sort(out.begin(), out.end(), CanonicalLess<RationalFunction>{});
    return out;
}

bool has_rational_root(const KPoly& f, Mode mode)
{
    for (const auto& r : exact_roots(f, mode == Mode::strict))
        if (r.exact)
            return true;
    return false;
}

EtaleAlgebra::EtaleAlgebra(KPoly f, int precision_cap) : f_(std::move(f)), cap_(precision_cap)
{
    validate_model(f_);
    monic_ = f_ * f_.leading().inverse();
    roots_ = roots_in_K(f_);
}

const std::vector<RationalFunction>& EtaleAlgebra::roots() const
{
    if (!is_split())
        throw NotSplit("f does not split into linear factors over K");
    return roots_;
}

const std::vector<LocalPoint>& EtaleAlgebra::local_points(const PlaceK& t0) const
{
    {
        std::shared_lock lock(cache_mutex_);
        auto it = cache_.find(t0);
        if (it != cache_.end())
            return it->second;
    }
    auto points = local_splitting(f_, t0, kInitialPrecision, cap_);
    std::unique_lock lock(cache_mutex_);
    return cache_.emplace(t0, std::move(points)).first->second;
}

EtaleElement EtaleElement::general(const std::array<RationalFunction, 4>& c)
{
    return EtaleElement(Form::general, c);
}

EtaleElement EtaleElement::split(const std::array<RationalFunction, 4>& d)
{
    return EtaleElement(Form::split, d);
}

EtaleElement EtaleElement::from_poly(const KPoly& p, const EtaleAlgebra& L)
{
    const KPoly r = p % L.monic_f();
    return general({r.coeff(0), r.coeff(1), r.coeff(2), r.coeff(3)});
}

EtaleElement EtaleElement::constant(const RationalFunction& m)
{
    return general({m, {}, {}, {}});
}

KPoly EtaleElement::as_poly() const
{
    if (form_ != Form::general)
        throw InvalidArgument("as_poly needs the general form");
    return KPoly(std::vector<RationalFunction>(v_.begin(), v_.end()));
}

std::string EtaleElement::to_string() const
{
    if (form_ == Form::general)
        return brauer2::to_string(as_poly(), "A");
    std::string s = "(";
    for (std::size_t i = 0; i < 4; ++i)
        s += (i ? "; " : "") + brauer2::to_string(v_[i]);
    return s + ")";
}

EtaleElement to_general(const EtaleElement& e, const EtaleAlgebra& L)
{
    if (!e.is_split())
        return e;
    const auto& a = L.roots();
    KPoly acc;
    for (std::size_t i = 0; i < 4; ++i) {
        KPoly term(e[i]);
        for (std::size_t j = 0; j < 4; ++j)
            if (j != i)
                term = term * KPoly(std::vector<RationalFunction>{-a[j], RationalFunction(1)})
                    * (a[i] - a[j]).inverse();
        acc += term;
    }
    return EtaleElement::general({acc.coeff(0), acc.coeff(1), acc.coeff(2), acc.coeff(3)});
}

EtaleElement to_split(const EtaleElement& e, const EtaleAlgebra& L)
{
    if (e.is_split())
        return e;
    const auto& a = L.roots();
    const KPoly p = e.as_poly();
    return EtaleElement::split(
        {evaluate_k(p, a[0]), evaluate_k(p, a[1]), evaluate_k(p, a[2]), evaluate_k(p, a[3])});
}

EtaleElement multiply(const EtaleElement& a, const EtaleElement& b, const EtaleAlgebra& L)
{
    if (a.is_split() || b.is_split()) {
        const EtaleElement x = to_split(a, L);
        const EtaleElement y = to_split(b, L);
        return EtaleElement::split({x[0] * y[0], x[1] * y[1], x[2] * y[2], x[3] * y[3]});
    }
    return EtaleElement::from_poly(a.as_poly() * b.as_poly(), L);
}

EtaleElement inverse(const EtaleElement& a, const EtaleAlgebra& L)
{
    if (a.is_split()) {
        std::array<RationalFunction, 4> d;
        for (std::size_t i = 0; i < 4; ++i) {
            if (a[i].is_zero())
                throw ZeroDivisor("split element has a zero coordinate");
            d[i] = a[i].inverse();
        }
        return EtaleElement::split(d);
    }
    const KPoly p = a.as_poly();
    if (p.is_zero())
        throw ZeroDivisor("inverse of zero");
    auto r = xgcd(p, L.monic_f());
    if (r.g.degree() != 0)
        throw ZeroDivisor("element is a zero divisor in L");
    return EtaleElement::from_poly(r.s, L);
}

EtaleElement power(const EtaleElement& a, int n, const EtaleAlgebra& L)
{
    EtaleElement base = n < 0 ? inverse(a, L) : a;
    unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
    EtaleElement acc = a.is_split() ? EtaleElement::split({1, 1, 1, 1}) : EtaleElement();
    while (e > 0) {
        if (e & 1U)
            acc = multiply(acc, base, L);
        e >>= 1U;
        if (e > 0)
            base = multiply(base, base, L);
    }
    return acc;
}

EtaleElement scale(const EtaleElement& a, const RationalFunction& m)
{
    std::array<RationalFunction, 4> v;
    for (std::size_t i = 0; i < 4; ++i)
        v[i] = a[i] * m;
    return a.is_split() ? EtaleElement::split(v) : EtaleElement::general(v);
}

bool is_zero_divisor(const EtaleElement& e, const EtaleAlgebra& L)
{
    if (e.is_split())
        return std::any_of(e.values().begin(), e.values().end(),
                           [](const RationalFunction& d) { return d.is_zero(); });
    const KPoly p = e.as_poly();
    return p.is_zero() || resultant_K(L.f(), p).is_zero();
}

RationalFunction norm(const EtaleElement& e, const EtaleAlgebra& L)
{
    if (is_zero_divisor(e, L))
        throw ZeroDivisor("norm of a zero divisor");
    if (e.is_split())
        return e[0] * e[1] * e[2] * e[3];
    const KPoly p = e.as_poly();
    RationalFunction r = resultant_K(L.f(), p);
    const RationalFunction lc = L.f().leading();
    for (int i = 0; i < p.degree(); ++i)
        r = r / lc;
    return r;
}

bool KernelClass::is_identity() const
{
    if (rep_.is_split())
        return std::all_of(rep_.values().begin(), rep_.values().end(),
                           [](const RationalFunction& d) { return d == RationalFunction(1); });
    return rep_ == EtaleElement();
}

namespace {

KernelClass normalize_split(const EtaleElement& e, Mode mode)
{
    const RationalFunction m = e[0].inverse();
    std::array<RationalFunction, 4> rep, mu;
    for (std::size_t i = 0; i < 4; ++i) {
        const RationalFunction d = e[i] * m;
        const SquareClass c = SquareClass::of_function(d, mode);
        rep[i] = RationalFunction(c.poly() * Rational(c.constant()));
        const KSquareTest root = is_square_in_K(rep[i] / d, mode);
        if (!root.is_square)
            throw InvalidArgument("internal: square-class representative is not equivalent");
        mu[i] = *root.witness;
    }
    return KernelClass(EtaleElement::split(rep), mode, m, EtaleElement::split(mu));
}

KernelClass normalize_general(const EtaleElement& e, Mode mode)
{
    std::array<QPoly, 4> p;
    const QPoly d = common_denominator(e.as_poly());
    QPoly content;
    for (std::size_t i = 0; i < 4; ++i) {
        p[i] = (e[i] * RationalFunction(d)).num();
        content = gcd(content, p[i]);
    }
    Integer num_gcd = 0, den_lcm = 1;
    int top = -1;
    for (std::size_t i = 0; i < 4; ++i) {
        p[i] = p[i] / content;
        if (!p[i].is_zero())
            top = static_cast<int>(i);
        for (const auto& c : p[i].coeffs()) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        }
    }
    Rational r(den_lcm, num_gcd);
    r.canonicalize();
    if (p[static_cast<std::size_t>(top)].leading() < 0)
        r = -r;
    std::array<RationalFunction, 4> c;
    for (std::size_t i = 0; i < 4; ++i)
        c[i] = RationalFunction(p[i] * r);
    const RationalFunction m = RationalFunction(d * r, content);
    return KernelClass(EtaleElement::general(c), mode, m, EtaleElement());
}

} // namespace

KernelTest in_kernel_of_norm(const EtaleElement& e, const EtaleAlgebra& L, Mode mode)
{
    const RationalFunction n = norm(e, L);
    if (!is_square_in_K(n, mode).is_square)
        return {false, std::nullopt, square_class(n, mode)};
    if (e.is_split() || L.is_split())
        return {true, normalize_split(to_split(e, L), mode), std::nullopt};
    return {true, normalize_general(e, mode), std::nullopt};
}

KernelClass make_kernel_class(const EtaleElement& e, const EtaleAlgebra& L, Mode mode)
{
    auto r = in_kernel_of_norm(e, L, mode);
    if (!r.in_kernel)
        throw InvalidArgument("element " + e.to_string() + " is not in the kernel of the norm");
    return *r.kernel_class;
}

KernelClass x_minus_alpha(const AffineDivisor& D, const EtaleAlgebra& L, Mode mode)
{
    int total = 0;
    EtaleElement acc;
    for (const auto& [pt, n] : D.terms) {
        if (pt.y.is_zero())
            throw InvalidDivisor("point with y = 0 (x = " + to_string(pt.x) + ")");
        if (pt.y * pt.y != evaluate_k(L.f(), pt.x))
            throw InvalidDivisor("point (" + to_string(pt.x) + ", " + to_string(pt.y)
                                 + ") is not on the curve");
        total += n;
        const auto base = EtaleElement::general({pt.x, RationalFunction(-1), {}, {}});
        acc = multiply(acc, power(base, n, L), L);
    }
    if (total % 2 != 0)
        throw InvalidDivisor("multiplicities must have even sum");
    return make_kernel_class(acc, L, mode);
}

std::vector<int> valuations_above(const EtaleElement& e, const EtaleAlgebra& L, const PlaceK& t0)
{
    const KPoly ell = to_general(e, L).as_poly();
    std::vector<int> out;
    for (const auto& P : L.local_points(t0))
        out.push_back(valuation_of_ell_at_point(ell, P));
    return out;
}

std::vector<PlaceK> candidate_places(const EtaleElement& e, const EtaleAlgebra& L,
                                     const BadPlaceSet& S)
{
    QPoly support(Rational(1));
    if (e.is_split()) {
        if (is_zero_divisor(e, L))
            throw ZeroDivisor("split element has a zero coordinate");
        for (const auto& d : e.values())
            support = support * d.num() * d.den();
    } else {
        const RationalFunction n = norm(e, L);
        support = common_denominator(e.as_poly()) * n.num() * n.den();
    }
    std::vector<PlaceK> out;
    if (support.degree() > 0)
        for (const auto& v : zeros_of(support))
            if (!S.contains(v))
                out.push_back(v);
    return out;
}

UnramifiedTest is_S_unramified(const EtaleElement& e, const EtaleAlgebra& L, const BadPlaceSet& S)
{
    UnramifiedTest result{true, std::nullopt, {}};
    for (const auto& t0 : candidate_places(e, L, S)) {
        result.checked.push_back(t0);
        std::vector<PointValuation> vals;
        if (e.is_split()) {
            const auto& a = L.roots();
            for (std::size_t i = 0; i < 4; ++i)
                vals.push_back({residue_label(a[i], t0), valuation_at(e[i], t0)});
        } else {
            const auto& points = L.local_points(t0);
            const auto v = valuations_above(e, L, t0);
            for (std::size_t i = 0; i < points.size(); ++i)
                vals.push_back({to_string(points[i].residue_factor(), "x"), v[i]});
        }
        std::optional<std::size_t> odd, even;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            auto& slot = (vals[i].valuation % 2 != 0) ? odd : even;
            if (!slot)
                slot = i;
        }
        if (odd && even) {
            result.unramified = false;
            result.witness = UnramifiedWitness{t0, std::move(vals), *odd, *even};
            return result;
        }
    }
    return result;
}

UnramifiedTest is_S_unramified(const KernelClass& c, const EtaleAlgebra& L, const BadPlaceSet& S)
{
    return is_S_unramified(c.representative(), L, S);
}

} // namespace brauer2
