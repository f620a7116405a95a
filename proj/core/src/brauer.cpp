#include "brauer2/brauer.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace brauer2 {

namespace {

const KPoly kOne{RationalFunction(1)};

std::string wrap(const std::string& s, bool atomic)
{
    return atomic ? s : "(" + s + ")";
}

std::string fraction_string(const KPoly& num, const KPoly& den)
{
    if (den == kOne)
        return to_string_xt(num);
    const auto terms = std::count_if(num.coeffs().begin(), num.coeffs().end(),
                                     [](const RationalFunction& c) { return !c.is_zero(); });
    const bool atomic_num = terms == 1 && is_atomic(num.leading());
    return wrap(to_string_xt(num), atomic_num) + "/(" + to_string_xt(den) + ")";
}

int gauss_valuation(const KPoly& p, const PlaceK& v)
{
    if (p.is_zero())
        throw InvalidArgument("valuation of zero");
    int best = 0;
    bool first = true;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero())
            continue;
        const int w = valuation_at(c, v);
        if (first || w < best)
            best = w;
        first = false;
    }
    return best;
}

// Reduction of p * pi^{-v(p)} coefficient-wise.
NfPoly unit_part(const KPoly& p, const PlaceK& v)
{
    const int w = gauss_valuation(p, v);
    std::vector<NfElem> c;
    for (const auto& a : p.coeffs()) {
        if (a.is_zero() || valuation_at(a, v) > w)
            c.emplace_back();
        else
            c.push_back(leading_residue(a, v).with_field(v.residue_field()));
    }
    NfPoly out(std::move(c));
    if (out.is_zero())
        throw IndeterminateResidue("unit part reduced to zero at " + v.to_string());
    return out;
}

int parity(int n)
{
    return ((n % 2) + 2) % 2;
}

void require_y_free(const QuaternionSymbol& s)
{
    if (s.a().involves_y() || s.b().involves_y())
        throw UnsupportedSymbol("residues of symbols involving y are not supported: "
                                + s.to_string());
}

} // namespace

CurveFunction::CurveFunction(const RationalFunction& c)
    : CurveFunction(KPoly(c), kOne, KPoly{}, kOne)
{
}

CurveFunction::CurveFunction(KPoly num, KPoly den)
    : CurveFunction(std::move(num), std::move(den), KPoly{}, kOne)
{
}

CurveFunction::CurveFunction(KPoly num, KPoly den, KPoly y_num, KPoly y_den)
    : num_(std::move(num)), den_(std::move(den)), y_num_(std::move(y_num)), y_den_(std::move(y_den))
{
    if (den_.is_zero() || y_den_.is_zero())
        throw InvalidArgument("zero denominator in a function on the curve");
}

RationalFunction CurveFunction::constant() const
{
    if (!in_K())
        throw InvalidArgument("function is not a constant of K: " + to_string());
    return num_.coeff(0) / den_.coeff(0);
}

std::string CurveFunction::to_string() const
{
    if (!involves_y())
        return fraction_string(num_, den_);
    std::string out;
    if (!num_.is_zero())
        out = fraction_string(num_, den_) + " + ";
    return out + wrap(fraction_string(y_num_, y_den_), y_num_ == kOne && y_den_ == kOne) + "*y";
}

QuaternionSymbol::QuaternionSymbol(RationalFunction a, RationalFunction b)
    : QuaternionSymbol(CurveFunction(a), CurveFunction(b))
{
}

QuaternionSymbol::QuaternionSymbol(CurveFunction a, CurveFunction b)
    : a_(std::move(a)), b_(std::move(b))
{
    if (a_.is_zero() || b_.is_zero())
        throw InvalidArgument("quaternion symbol with a zero slot");
    ambient_ = a_.in_K() && b_.in_K() ? Ambient::K : Ambient::curve;
}

std::string QuaternionSymbol::to_string() const
{
    return "(" + a_.to_string() + ", " + b_.to_string() + ")";
}

std::string to_string(const SymbolSum& s)
{
    if (s.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? " + " : "") + s[i].to_string();
    return out;
}

SquareClass tame_residue(const QuaternionSymbol& s, const PlaceK& v, Mode mode)
{
    if (s.ambient() != QuaternionSymbol::Ambient::K)
        throw UnsupportedSymbol("tame_residue needs a symbol over K: " + s.to_string());
    const RationalFunction a = s.a().constant();
    const RationalFunction b = s.b().constant();
    const int va = valuation_at(a, v);
    const int vb = valuation_at(b, v);
    // a = pi^va a0, b = pi^vb b0: the pi powers cancel in a^vb b^-va.
    NfElem u(1);
    if (parity(va) && parity(vb))
        u = NfElem(-1);
    if (parity(vb))
        u = u * leading_residue(a, v);
    if (parity(va))
        u = u * leading_residue(b, v);
    if (u.is_zero())
        throw IndeterminateResidue("tame symbol unit reduced to zero at " + v.to_string());
    // Rational residue fields report classes in Q^x / Q^x2.
    const NfElem reduced = u.with_field(v.residue_field());
    if (v.degree() == 1 && reduced.is_base())
        return SquareClass::of_rational(reduced.base_value(), mode);
    return SquareClass::of_number_field(u.with_field(v.residue_field()), v.residue_field(), mode);
}

std::vector<PlaceK> residue_support(const QuaternionSymbol& s)
{
    if (s.ambient() != QuaternionSymbol::Ambient::K)
        throw UnsupportedSymbol("residue_support needs a symbol over K: " + s.to_string());
    const RationalFunction a = s.a().constant();
    const RationalFunction b = s.b().constant();
    const QPoly support = a.num() * a.den() * b.num() * b.den();
    std::vector<PlaceK> out;
    if (support.degree() > 0)
        out = zeros_of(support);
    out.push_back(PlaceK::infinity());
    return out;
}

SquareClass reciprocity_product(const QuaternionSymbol& s, Mode mode)
{
    Rational acc(1);
    for (const auto& v : residue_support(s)) {
        const SquareClass r = tame_residue(s, v, Mode::strict);
        if (r.ambient() == SquareClass::Ambient::rationals)
            acc *= Rational(r.constant());
        else
            acc *= norm(r.nf_value().with_field(v.residue_field()), v.residue_field());
    }
    return SquareClass::of_rational(acc, mode);
}

SymbolSum split_h_expansion(const EtaleElement& e, const EtaleAlgebra& L)
{
    const EtaleElement d = to_split(e, L);
    const auto& roots = L.roots();
    SymbolSum out;
    for (std::size_t i = 0; i < 4; ++i) {
        if (d[i].is_zero())
            throw ZeroDivisor("split element has a zero coordinate");
        if (d[i] == RationalFunction(1))
            continue;
        const KPoly lin(std::vector<RationalFunction>{-roots[i], RationalFunction(1)});
        out.emplace_back(CurveFunction(d[i]), CurveFunction(lin));
    }
    return out;
}

SymbolSum split_h_expansion(const KernelClass& c, const EtaleAlgebra& L)
{
    return split_h_expansion(c.representative(), L);
}

std::vector<std::string> ResidueCertificate::ramified_at() const
{
    std::vector<std::string> out;
    for (const auto& e : entries)
        if (!e.residue.is_identity())
            out.push_back(e.place);
    return out;
}

ResidueCertificate verify_in_Br_C(const KernelClass& c, const EtaleAlgebra& L)
{
    ResidueCertificate cert;
    const Mode mode = c.mode();
    // f = (x - alpha) g with g(alpha) = f'(alpha); x - alpha then vanishes to
    // order exactly 2 at the ramification point y = 0 above x = alpha.
    const EtaleElement fprime = EtaleElement::from_poly(derivative(L.f()), L);
    RationalFunction nd;
    try {
        nd = norm(fprime, L);
    } catch (const ZeroDivisor&) {
        throw DegenerateModel("f'(alpha) is a zero divisor in L: f is not squarefree");
    }
    cert.entries.push_back({"x = alpha", square_class(RationalFunction(1), mode),
                            "v(x - alpha) = 2, N(f'(alpha)) = " + to_string(nd)});
    const RationalFunction n = norm(c.representative(), L);
    const SquareClass at_inf = square_class(n.inverse(), mode);
    cert.entries.push_back({"infinity of C", at_inf, "class of N(ell)^-1 = " + to_string(n.inverse())});
    cert.unramified = cert.ramified_at().empty();
    return cert;
}

FiberFieldPtr fiber_at(const EtaleAlgebra& L, const PlaceK& t0)
{
    const auto& points = L.local_points(t0);
    const LocalModelPtr& m = points.front().model();
    return std::make_shared<const FiberField>(FiberField{t0.residue_field(), m->reduction});
}

SquareClass vertical_residue_of_h(const EtaleElement& e, const EtaleAlgebra& L,
                                  const BadPlaceSet& S, const PlaceK& t0, Mode mode)
{
    if (S.contains(t0))
        throw BadReduction("vertical residues are only defined at good places; " + t0.to_string()
                           + " is in S");
    if (t0.is_infinity())
        throw BadReduction("the place at infinity is always in S");
    NfPoly prod(NfElem(1));
    if (e.is_split()) {
        // The points above t0 are x = alpha_j mod t0, with valuation v_t0(d_j).
        const auto& roots = L.roots();
        const NfElem one = NfElem(1).with_field(t0.residue_field());
        for (std::size_t j = 0; j < 4; ++j)
            if (parity(valuation_at(e[j], t0)))
                prod = prod * NfPoly(std::vector<NfElem>{-reduce_at(roots[j], t0), one});
        return SquareClass::of_fiber(prod, fiber_at(L, t0), mode);
    }
    const auto& points = L.local_points(t0);
    const std::vector<int> vals = valuations_above(e, L, t0);
    for (std::size_t j = 0; j < points.size(); ++j)
        if (parity(vals[j]))
            prod = prod * points[j].residue_factor();
    return SquareClass::of_fiber(prod, fiber_at(L, t0), mode);
}

SquareClass vertical_residue_of_h(const KernelClass& c, const EtaleAlgebra& L,
                                  const BadPlaceSet& S, const PlaceK& t0)
{
    return vertical_residue_of_h(c.representative(), L, S, t0, c.mode());
}

ResidueCertificate residue_profile(const SymbolSum& s, const std::vector<PlaceK>& places,
                                   const EtaleAlgebra& L, Mode mode)
{
    for (const auto& sym : s)
        require_y_free(sym);
    ResidueCertificate cert;
    for (const auto& t0 : places) {
        if (t0.is_infinity())
            throw BadReduction("the place at infinity is always in S");
        const FiberFieldPtr fiber = fiber_at(L, t0);
        const NumberFieldPtr& kappa = t0.residue_field();
        NfPoly g(NfElem(1).with_field(kappa));
        for (const auto& sym : s) {
            const int va = gauss_valuation(sym.a().num(), t0) - gauss_valuation(sym.a().den(), t0);
            const int vb = gauss_valuation(sym.b().num(), t0) - gauss_valuation(sym.b().den(), t0);
            if (parity(va) && parity(vb))
                g = g * NfPoly(NfElem(-1));
            // a0^vb b0^-va; n/d is n*d modulo squares.
            if (parity(vb))
                g = g * unit_part(sym.a().num(), t0) * unit_part(sym.a().den(), t0);
            if (parity(va))
                g = g * unit_part(sym.b().num(), t0) * unit_part(sym.b().den(), t0);
        }
        const SquareClass r = SquareClass::of_fiber(g, fiber, mode);
        cert.entries.push_back({t0.to_string(), r, ""});
    }
    cert.unramified = cert.ramified_at().empty();
    return cert;
}

SquareClass CorClass::vertical_residue(const PlaceK& t0) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(t0);
        if (it != cache_.end())
            return it->second;
    }
    SquareClass r = vertical_residue_of_h(ell_, *L_, S_, t0);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(t0, std::move(r)).first->second;
}

ResidueCertificate CorClass::profile(const std::vector<PlaceK>& places) const
{
    ResidueCertificate cert;
    for (const auto& t0 : places)
        cert.entries.push_back({t0.to_string(), vertical_residue(t0), ""});
    cert.unramified = cert.ramified_at().empty();
    return cert;
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "PASS";
    case Verdict::fail:
        return "FAIL";
    case Verdict::error:
        return "ERROR";
    }
    return "ERROR";
}

namespace {

FilterRow filter_one(const EtaleElement& e, const EtaleAlgebra& L, const BadPlaceSet& S, Mode mode)
{
    FilterRow row;
    row.candidate = e.to_string();
    try {
        const KernelTest k = in_kernel_of_norm(e, L, mode);
        if (!k.in_kernel)
            throw InvalidArgument("not in ker N: the norm has class " + k.witness->to_string());
        const UnramifiedTest u = is_S_unramified(e, L, S);
        if (u.unramified) {
            row.verdict = Verdict::pass;
            return row;
        }
        const UnramifiedWitness& w = *u.witness;
        const SquareClass r = vertical_residue_of_h(e, L, S, w.place, mode);
        NfPoly g = r.fiber_poly();
        if (mode == Mode::strict)
            g = g * NfPoly(r.nf_value());
        row.reverified = !is_square_in_fiber_field(g, r.fiber(), mode);
        if (!row.reverified)
            throw IndeterminateResidue("certificate at " + w.place.to_string()
                                       + " did not re-verify as a non-square");
        row.verdict = Verdict::fail;
        row.place = w.place;
        row.residue = r;
        row.valuations = w.valuations;
    } catch (const Error& err) {
        row = FilterRow{};
        row.candidate = e.to_string();
        row.verdict = Verdict::error;
        row.error_kind = err.kind();
        row.message = err.what();
    }
    return row;
}

} // namespace

std::vector<FilterRow> br_X_filter(const std::vector<EtaleElement>& candidates,
                                   const EtaleAlgebra& L, const BadPlaceSet& S, Mode mode,
                                   unsigned threads)
{
    std::vector<FilterRow> rows(candidates.size());
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(candidates.size())));
    if (n <= 1) {
        for (std::size_t i = 0; i < candidates.size(); ++i)
            rows[i] = filter_one(candidates[i], L, S, mode);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < candidates.size(); i = next++)
                rows[i] = filter_one(candidates[i], L, S, mode);
        });
    for (auto& th : pool)
        th.join();
    return rows;
}

} // namespace brauer2
