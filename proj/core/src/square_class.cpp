#include "brauer2/square_class.hpp"

namespace brauer2 {

const char* to_string(Mode mode)
{
    return mode == Mode::geometric ? "geometric" : "strict";
}

namespace {

NfPoly monic_nf(const NfPoly& p)
{
    return monic(p);
}

bool nf_ratio_is_square(const NfElem& a, const NfElem& b, const NumberFieldPtr& field)
{
    return is_square_in_number_field(a / b, field).is_square;
}

bool same_fiber(const FiberFieldPtr& a, const FiberFieldPtr& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return a->f0 == b->f0 && a->residue_field->modulus == b->residue_field->modulus;
}

} // namespace

SquareClass SquareClass::of_rational(const Rational& q, Mode mode)
{
    if (sgn(q) == 0)
        throw InvalidArgument("square class of zero");
    SquareClass c(Ambient::rationals, mode);
    if (mode == Mode::strict)
        c.constant_ = squarefree_kernel(q);
    return c;
}

SquareClass SquareClass::of_number_field(const NfElem& e, const NumberFieldPtr& field, Mode mode)
{
    if (e.is_zero())
        throw InvalidArgument("square class of zero");
    SquareClass c(Ambient::number_field, mode);
    c.field_ = field;
    if (mode == Mode::strict) {
        if (e.is_base())
            c.nf_value_ = NfElem(field, QPoly(Rational(squarefree_kernel(e.base_value()))));
        else
            c.nf_value_ = e.with_field(field);
    }
    return c;
}

SquareClass SquareClass::of_function(const RationalFunction& r, Mode mode)
{
    if (r.is_zero())
        throw InvalidArgument("square class of zero");
    SquareClass c(Ambient::function_field, mode);
    c.poly_ = odd_part(r.num()) * odd_part(r.den());
    if (mode == Mode::strict)
        c.constant_ = squarefree_kernel(r.num().leading());
    return c;
}

SquareClass SquareClass::of_fiber(const NfPoly& g, const FiberFieldPtr& fiber, Mode mode)
{
    if (g.is_zero())
        throw InvalidArgument("square class of zero");
    SquareClass c(Ambient::fiber_field, mode);
    c.fiber_ = fiber;
    c.field_ = fiber->residue_field;
    c.fiber_poly_ = odd_part(g);
    if (mode == Mode::strict)
        c.nf_value_ = g.leading().with_field(c.field_);
    c.normalize_fiber();
    return c;
}

SquareClass SquareClass::identity_of_fiber(const FiberFieldPtr& fiber, Mode mode)
{
    return of_fiber(NfPoly(NfElem(1)), fiber, mode);
}

void SquareClass::normalize_fiber()
{
    // kappa(x)^x modulo squares and f0: choose the smaller of h and
    // h * f0 / gcd(h, f0)^2.
    const NfPoly f0m = monic_nf(fiber_->f0);
    const NfPoly g = gcd(fiber_poly_, f0m);
    const NfPoly swapped = (fiber_poly_ / g) * (f0m / g);
    if (canonical_compare(swapped, fiber_poly_) < 0) {
        fiber_poly_ = swapped;
        if (mode_ == Mode::strict)
            nf_value_ = nf_value_ * fiber_->f0.leading();
    }
}

bool SquareClass::is_identity() const
{
    switch (ambient_) {
    case Ambient::rationals:
        return constant_ == 1;
    case Ambient::number_field:
        return mode_ == Mode::geometric || is_square_in_number_field(nf_value_, field_).is_square;
    case Ambient::function_field:
        return poly_.degree() == 0 && constant_ == 1;
    case Ambient::fiber_field:
        return fiber_poly_.degree() == 0
            && (mode_ == Mode::geometric || is_square_in_number_field(nf_value_, field_).is_square);
    }
    return false;
}

SquareClass SquareClass::operator*(const SquareClass& o) const
{
    if (ambient_ != o.ambient_ || mode_ != o.mode_)
        throw InvalidArgument("product of square classes from different ambients or modes");
    switch (ambient_) {
    case Ambient::rationals:
        return of_rational(Rational(constant_ * o.constant_), mode_);
    case Ambient::number_field:
        return of_number_field(nf_value_ * o.nf_value_, field_, mode_);
    case Ambient::function_field: {
        SquareClass c = of_function(RationalFunction(poly_ * o.poly_), mode_);
        if (mode_ == Mode::strict)
            c.constant_ = squarefree_kernel(Rational(constant_ * o.constant_));
        return c;
    }
    case Ambient::fiber_field: {
        if (!same_fiber(fiber_, o.fiber_))
            throw InvalidArgument("product of fiber square classes over different fibers");
        NfPoly prod = fiber_poly_ * o.fiber_poly_;
        if (mode_ == Mode::strict)
            prod = prod * (nf_value_ * o.nf_value_);
        return of_fiber(prod, fiber_, mode_);
    }
    }
    return *this;
}

bool operator==(const SquareClass& a, const SquareClass& b)
{
    if (a.ambient_ != b.ambient_ || a.mode_ != b.mode_)
        return false;
    switch (a.ambient_) {
    case SquareClass::Ambient::rationals:
        return a.constant_ == b.constant_;
    case SquareClass::Ambient::number_field:
        return a.mode_ == Mode::geometric || nf_ratio_is_square(a.nf_value_, b.nf_value_, a.field_);
    case SquareClass::Ambient::function_field:
        return a.poly_ == b.poly_ && a.constant_ == b.constant_;
    case SquareClass::Ambient::fiber_field:
        if (!same_fiber(a.fiber_, b.fiber_) || a.fiber_poly_ != b.fiber_poly_)
            return false;
        return a.mode_ == Mode::geometric || nf_ratio_is_square(a.nf_value_, b.nf_value_, a.field_);
    }
    return false;
}

std::string factored_string(const QPoly& p, const std::string& var)
{
    if (p.degree() <= 0)
        return to_string(p.coeff(0));
    std::string out;
    const Rational lc = p.leading();
    if (lc != 1)
        out = (lc == -1) ? "-" : to_string(lc) + "*";
    bool first = true;
    for (const auto& f : factor_over_rationals(p)) {
        if (!first)
            out += "*";
        first = false;
        std::string s = to_string(f.factor, var);
        std::size_t terms = 0;
        for (const auto& c : f.factor.coeffs())
            terms += sgn(c) != 0 ? 1 : 0;
        if (terms > 1)
            s = "(" + s + ")";
        out += s;
        if (f.multiplicity > 1)
            out += "^" + std::to_string(f.multiplicity);
    }
    return out;
}

std::string factored_string(const NfPoly& p, const NumberFieldPtr& field, const std::string& var)
{
    if (field->degree() == 1) {
        std::vector<Rational> v;
        for (const auto& c : p.coeffs())
            v.push_back(c.base_value());
        return factored_string(QPoly(std::move(v)), var);
    }
    if (p.degree() <= 0)
        return to_string(p.coeff(0));
    std::string out;
    if (p.leading() != NfElem(1))
        out = "(" + to_string(p.leading().with_field(field)) + ")*";
    bool first = true;
    for (const auto& [g, m] : factor_over_number_field(p, field)) {
        if (!first)
            out += "*";
        first = false;
        out += "(" + to_string(g, var) + ")";
        if (m > 1)
            out += "^" + std::to_string(m);
    }
    return out;
}

std::string SquareClass::to_string() const
{
    switch (ambient_) {
    case Ambient::rationals:
        return constant_.get_str();
    case Ambient::number_field:
        return mode_ == Mode::geometric ? "1" : brauer2::to_string(nf_value_);
    case Ambient::function_field: {
        std::string p = factored_string(poly_, "t");
        if (mode_ == Mode::strict && constant_ != 1)
            return constant_.get_str() + (poly_.degree() > 0 ? "*" + p : "");
        return p;
    }
    case Ambient::fiber_field: {
        std::string p = factored_string(fiber_poly_, field_, "x");
        if (mode_ == Mode::strict && nf_value_ != NfElem(1)) {
            std::string c = brauer2::to_string(nf_value_);
            if (!is_atomic(nf_value_))
                c = "(" + c + ")";
            return c + (fiber_poly_.degree() > 0 ? "*" + p : "");
        }
        return p;
    }
    }
    return "?";
}

SquareClass square_class(const RationalFunction& r, Mode mode)
{
    return SquareClass::of_function(r, mode);
}

SquareClass square_class(const Rational& q, Mode mode)
{
    return SquareClass::of_rational(q, mode);
}

KSquareTest is_square_in_K(const RationalFunction& r, Mode mode)
{
    if (r.is_zero())
        throw InvalidArgument("is_square_in_K: zero");
    RationalFunction root(Rational(1));
    auto half = [](const QPoly& p, bool& ok) {
        QPoly acc(Rational(1));
        for (const auto& [g, m] : squarefree_decomposition(p)) {
            if (m % 2 == 1)
                ok = false;
            acc = acc * pow(g, static_cast<unsigned>(m / 2));
        }
        return acc;
    };
    bool ok = true;
    const QPoly n = half(r.num(), ok);
    const QPoly d = half(r.den(), ok);
    if (!ok)
        return {false, std::nullopt};
    const Rational lc = r.num().leading();
    if (mode == Mode::strict) {
        if (!is_square(lc))
            return {false, std::nullopt};
        return {true, RationalFunction(n * exact_sqrt(lc), d)};
    }
    return {true, RationalFunction(n, d)};
}

bool is_square_in_fiber_field(const NfPoly& g, const FiberFieldPtr& fiber, Mode mode)
{
    if (g.is_zero())
        throw InvalidArgument("is_square_in_fiber_field: zero");
    if (fiber->f0.degree() != 4 || gcd(fiber->f0, derivative(fiber->f0)).degree() > 0)
        throw BadReduction("fiber y^2 = " + to_string(fiber->f0, "x") + " is singular");
    return SquareClass::of_fiber(g, fiber, mode).is_identity();
}

} // namespace brauer2
