#include "brauer2/rational_function.hpp"

#include <algorithm>

namespace brauer2 {

RationalFunction::RationalFunction(QPoly num, QPoly den)
{
    if (den.is_zero())
        throw InvalidArgument("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = QPoly(Rational(1));
        return;
    }
    QPoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = num / g;
        den = den / g;
    }
    const Rational lc = den.leading();
    num_ = num * (Rational(1) / lc);
    den_ = den * (Rational(1) / lc);
}

RationalFunction RationalFunction::inverse() const
{
    if (is_zero())
        throw InvalidArgument("inverse of the zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_ == b.den_)
        return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.is_polynomial() && b.is_polynomial()) {
        RationalFunction r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    return a * b.inverse();
}

RationalFunction RationalFunction::compose(const RationalFunction& q) const
{
    auto eval = [&](const QPoly& p) {
        RationalFunction acc;
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
            acc = acc * q + RationalFunction(*it);
        return acc;
    };
    return eval(num_) / eval(den_);
}

namespace {

bool is_monomial(const QPoly& p)
{
    return std::count_if(p.coeffs().begin(), p.coeffs().end(),
                         [](const Rational& c) { return sgn(c) != 0; })
        <= 1;
}

} // namespace

std::string to_string(const RationalFunction& r, const std::string& var)
{
    if (r.is_polynomial())
        return to_string(r.num(), var);
    std::string n = to_string(r.num(), var);
    if (!is_monomial(r.num()))
        n = "(" + n + ")";
    std::string d = to_string(r.den(), var);
    if (!is_monomial(r.den()))
        d = "(" + d + ")";
    return n + "/" + d;
}

bool is_atomic(const RationalFunction& r)
{
    return r.is_constant();
}

int canonical_compare(const RationalFunction& a, const RationalFunction& b)
{
    const int c = canonical_compare(a.num(), b.num());
    return c != 0 ? c : canonical_compare(a.den(), b.den());
}

QPoly common_denominator(const KPoly& p)
{
    QPoly d(Rational(1));
    for (const auto& c : p.coeffs())
        d = d * (c.den() / gcd(d, c.den()));
    return monic(d);
}

std::string to_string_xt(const KPoly& p, const std::string& xvar, const std::string& tvar)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        RationalFunction c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        const bool negative = sgn(c.num().leading()) < 0;
        if (negative)
            c = -c;
        std::size_t terms = 0;
        for (const auto& a : c.num().coeffs())
            terms += sgn(a) != 0 ? 1 : 0;
        const bool compound = terms > 1 || !c.is_polynomial();
        std::string cs = to_string(c, tvar);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const std::string mono = i == 0 ? "" : xvar + (i > 1 ? "^" + std::to_string(i) : "");
        if (compound && (i > 0 || negative || !c.is_polynomial()))
            cs = "(" + cs + ")";
        if (mono.empty())
            out += cs;
        else if (cs == "1")
            out += mono;
        else
            out += cs + "*" + mono;
    }
    return out;
}

namespace {

std::vector<QPoly> cleared(const KPoly& p, const QPoly& d)
{
    std::vector<QPoly> out;
    for (const auto& c : p.coeffs())
        out.push_back((c * RationalFunction(d)).num());
    return out;
}

QPoly specialize(const std::vector<QPoly>& p, const Rational& c)
{
    std::vector<Rational> v;
    for (const auto& q : p)
        v.push_back(q(c));
    return QPoly(std::move(v));
}

int max_degree(const std::vector<QPoly>& p)
{
    int e = 0;
    for (const auto& q : p)
        e = std::max(e, q.degree());
    return e;
}

} // namespace

RationalFunction resultant_K(const KPoly& a, const KPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    const QPoly da = common_denominator(a);
    const QPoly db = common_denominator(b);
    const auto A = cleared(a, da);
    const auto B = cleared(b, db);
    const int m = a.degree();
    const int n = b.degree();
    const std::size_t points = static_cast<std::size_t>(n * max_degree(A) + m * max_degree(B) + 1);
    std::vector<Rational> xs, ys;
    for (int k = 0; xs.size() < points; ++k) {
        const Rational c = (k % 2 == 1) ? Rational((k + 1) / 2) : Rational(-(k / 2));
        if (sgn(A.back()(c)) == 0 || sgn(B.back()(c)) == 0)
            continue;
        xs.push_back(c);
        ys.push_back(resultant(specialize(A, c), specialize(B, c)));
    }
    const QPoly scale = pow(da, static_cast<unsigned>(n)) * pow(db, static_cast<unsigned>(m));
    return RationalFunction(interpolate(xs, ys), scale);
}

RationalFunction discriminant_K(const KPoly& f)
{
    const int n = f.degree();
    if (n < 1)
        throw InvalidArgument("discriminant of a constant");
    RationalFunction r = resultant_K(f, derivative(f)) / f.leading();
    if (((n * (n - 1)) / 2) % 2 == 1)
        r = -r;
    return r;
}

} // namespace brauer2
