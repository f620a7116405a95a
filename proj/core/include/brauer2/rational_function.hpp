#pragma once

#include "brauer2/factor.hpp"
#include "brauer2/poly.hpp"
#include "brauer2/rational.hpp"

#include <string>

namespace brauer2 {

/// Element of K = Q(t): num/den with gcd 1 and den monic. Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(int c) : num_(Rational(c)), den_(Rational(1)) {} // NOLINT
    explicit RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit RationalFunction(QPoly p) : num_(std::move(p)), den_(Rational(1)) {}
    RationalFunction(QPoly num, QPoly den);

    static RationalFunction t() { return RationalFunction(QPoly::variable()); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rational constant_value() const { return num_.coeff(0); }

    RationalFunction inverse() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b)
    {
        return !(a == b);
    }

    /// r(q) for q a rational function (composition t -> q).
    RationalFunction compose(const RationalFunction& q) const;

private:
    QPoly num_;
    QPoly den_;
};

std::string to_string(const RationalFunction& r, const std::string& var = "t");
bool is_atomic(const RationalFunction& r);
int canonical_compare(const RationalFunction& a, const RationalFunction& b);

/// Polynomials in x with coefficients in K.
using KPoly = Poly<RationalFunction>;

/// Least common multiple of the coefficient denominators (monic).
QPoly common_denominator(const KPoly& p);

/// Res_x(a, b) and disc_x(a) over K, computed by clearing denominators,
/// specializing t at integers and interpolating.
RationalFunction resultant_K(const KPoly& a, const KPoly& b);
RationalFunction discriminant_K(const KPoly& f);

/// Bivariate rendering "x^4 - t" (coefficients in t).
std::string to_string_xt(const KPoly& p, const std::string& xvar = "x",
                         const std::string& tvar = "t");

} // namespace brauer2
