#include "brauer2/expression.hpp"

#include "brauer2/factor.hpp"

#include <algorithm>
#include <cctype>

namespace brauer2 {

namespace {

const KPoly kOne{RationalFunction(1)};

XFraction make_fraction(KPoly num, KPoly den)
{
    if (den.is_zero())
        throw ZeroDivisor("division by zero");
    if (num.is_zero())
        return {KPoly{}, kOne};
    if (den.degree() > 0) {
        const KPoly g = gcd(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
    }
    const RationalFunction lc = den.leading();
    return {num * (RationalFunction(1) / lc), den * (RationalFunction(1) / lc)};
}

XFraction add(const XFraction& a, const XFraction& b, bool negate)
{
    const KPoly bn = negate ? -b.num : b.num;
    if (a.den == b.den)
        return make_fraction(a.num + bn, a.den);
    return make_fraction(a.num * b.den + bn * a.den, a.den * b.den);
}

XFraction mul(const XFraction& a, const XFraction& b)
{
    return make_fraction(a.num * b.num, a.den * b.den);
}

XFraction invert(const XFraction& a)
{
    if (a.num.is_zero())
        throw ZeroDivisor("division by zero");
    return make_fraction(a.den, a.num);
}

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& xvars, std::string tvar,
           SourcePos at)
        : s_(text), xvars_(xvars), tvar_(std::move(tvar)), at_(at)
    {
    }

    XFraction parse_all()
    {
        skip_space();
        if (pos_ >= s_.size())
            fail("empty expression");
        XFraction v = expr();
        skip_space();
        if (pos_ < s_.size())
            fail(std::string("unexpected '") + s_[pos_] + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw SyntaxError(what, at_.line, at_.column + static_cast<int>(pos_));
    }

    void skip_space()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    XFraction expr()
    {
        XFraction v = term();
        while (true) {
            if (accept('+'))
                v = add(v, term(), false);
            else if (accept('-'))
                v = add(v, term(), true);
            else
                return v;
        }
    }

    XFraction term()
    {
        XFraction v = unary();
        while (true) {
            if (accept('*')) {
                v = mul(v, unary());
            } else if (accept('/')) {
                const std::size_t where = pos_;
                XFraction d = unary();
                if (d.num.is_zero()) {
                    pos_ = where;
                    fail("division by zero");
                }
                v = mul(v, invert(d));
            } else {
                return v;
            }
        }
    }

    XFraction unary()
    {
        if (accept('-')) {
            XFraction v = unary();
            return {-v.num, v.den};
        }
        if (accept('+'))
            return unary();
        return power();
    }

    XFraction power()
    {
        XFraction base = atom();
        if (!accept('^'))
            return base;
        skip_space();
        bool negative = false;
        if (accept('-'))
            negative = true;
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("exponent must be an integer literal");
        if (pos_ - start > 6) {
            pos_ = start;
            fail("exponent too large");
        }
        const unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
        if (negative) {
            if (base.num.is_zero()) {
                pos_ = start;
                fail("negative power of zero");
            }
            base = invert(base);
        }
        return {pow(base.num, e), pow(base.den, e)};
    }

    XFraction atom()
    {
        skip_space();
        if (pos_ >= s_.size())
            fail("unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            XFraction v = expr();
            if (!accept(')'))
                fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
                fail("floating-point literals are not accepted; write a fraction");
            const Rational q(Integer(s_.substr(start, pos_ - start)));
            return {KPoly(RationalFunction(q)), kOne};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size()
                   && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            if (name == tvar_)
                return {KPoly(RationalFunction::t()), kOne};
            if (std::find(xvars_.begin(), xvars_.end(), name) != xvars_.end())
                return {KPoly::variable(), kOne};
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    const std::vector<std::string>& xvars_;
    std::string tvar_;
    SourcePos at_;
    std::size_t pos_ = 0;
};

std::string trim(const std::string& s, std::size_t* offset = nullptr)
{
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    std::size_t e = s.size();
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    if (offset)
        *offset = b;
    return s.substr(b, e - b);
}

SourcePos shifted(SourcePos at, std::size_t by)
{
    return {at.line, at.column + static_cast<int>(by)};
}

// Splits at top-level occurrences of sep, reporting each piece's offset.
std::vector<std::pair<std::string, std::size_t>> split_top(const std::string& s, char sep)
{
    std::vector<std::pair<std::string, std::size_t>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == '(')
            ++depth;
        else if (i < s.size() && s[i] == ')')
            --depth;
        if (i == s.size() || (s[i] == sep && depth == 0)) {
            out.emplace_back(s.substr(start, i - start), start);
            start = i + 1;
        }
    }
    return out;
}

} // namespace

XFraction parse_x_fraction(const std::string& text, const std::vector<std::string>& xvars,
                           const std::string& tvar, SourcePos at)
{
    return Parser(text, xvars, tvar, at).parse_all();
}

KPoly parse_xt(const std::string& text, const std::string& xvar, const std::string& tvar,
               SourcePos at)
{
    const XFraction v = parse_x_fraction(text, {xvar}, tvar, at);
    if (v.den.degree() > 0)
        throw SyntaxError("expected a polynomial in " + xvar + ", got a fraction", at.line,
                          at.column);
    return v.num;
}

RationalFunction parse_t(const std::string& text, const std::string& tvar, SourcePos at)
{
    const XFraction v = parse_x_fraction(text, {}, tvar, at);
    return v.num.coeff(0) / v.den.coeff(0);
}

PlaceK parse_place(const std::string& text, SourcePos at)
{
    std::size_t off = 0;
    const std::string s = trim(text, &off);
    std::string lower = s;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "inf" || lower == "infinity")
        return PlaceK::infinity();
    const SourcePos here = shifted(at, off);
    const RationalFunction r = parse_t(s, "t", here);
    if (!r.is_polynomial() || r.num().degree() < 1)
        throw SyntaxError("a place is a polynomial in t of positive degree", here.line,
                          here.column);
    const QPoly p = monic(r.num());
    const auto factors = factor_over_rationals(p);
    if (factors.size() != 1 || factors.front().multiplicity != 1)
        throw SyntaxError("place polynomial " + to_string(p, "t") + " is not irreducible",
                          here.line, here.column);
    return p.degree() == 1 ? PlaceK::at(-p.coeff(0)) : PlaceK::finite(p);
}

std::vector<PlaceK> parse_place_list(const std::string& text, SourcePos at)
{
    std::vector<PlaceK> out;
    if (trim(text).empty())
        return out;
    for (const auto& [piece, off] : split_top(text, ','))
        out.push_back(parse_place(piece, shifted(at, off)));
    return out;
}

EtaleElement parse_element(const std::string& text, const EtaleAlgebra& L, SourcePos at)
{
    std::size_t off = 0;
    const std::string s = trim(text, &off);
    const SourcePos here = shifted(at, off);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        const std::string inner = s.substr(1, s.size() - 2);
        const auto parts = split_top(inner, ';');
        if (parts.size() > 1) {
            if (parts.size() != 4)
                throw SyntaxError("a split element has 4 coordinates, got "
                                      + std::to_string(parts.size()),
                                  here.line, here.column);
            if (!L.is_split())
                throw NotSplit("split coordinates need f to split into linear factors over K");
            std::array<RationalFunction, 4> d;
            for (std::size_t i = 0; i < 4; ++i)
                d[i] = parse_t(parts[i].first, "t", shifted(here, 1 + parts[i].second));
            return EtaleElement::split(d);
        }
    }
    const XFraction v = parse_x_fraction(s, {"A", "alpha"}, "t", here);
    if (v.den.degree() > 0)
        throw SyntaxError("an element of L is a polynomial in A", here.line, here.column);
    return EtaleElement::from_poly(v.num, L);
}

} // namespace brauer2
