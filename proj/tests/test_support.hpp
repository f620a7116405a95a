#pragma once

#include "brauer2/brauer.hpp"
#include "brauer2/enumerate.hpp"

#include <ostream>
#include <random>
#include <vector>

namespace brauer2 {

// Readable gtest failure messages.
inline void PrintTo(const SquareClass& c, std::ostream* os)
{
    *os << c.to_string();
}
inline void PrintTo(const KernelClass& c, std::ostream* os)
{
    *os << c.to_string();
}
inline void PrintTo(const EtaleElement& e, std::ostream* os)
{
    *os << e.to_string();
}
inline void PrintTo(const PlaceK& v, std::ostream* os)
{
    *os << v.to_string();
}

} // namespace brauer2

namespace brauer2::testing {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng, int bound = 9)
{
    Rational q(uniform(rng, -bound, bound), uniform(rng, 1, bound));
    q.canonicalize();
    return q;
}

inline Rational rand_nonzero_rational(Rng& rng, int bound = 9)
{
    Rational q;
    do
        q = rand_rational(rng, bound);
    while (sgn(q) == 0);
    return q;
}

inline QPoly rand_qpoly(Rng& rng, int degree, int bound = 9)
{
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i)
        c.push_back(Rational(uniform(rng, -bound, bound)));
    if (sgn(c.back()) == 0)
        c.back() = 1;
    return QPoly(std::move(c));
}

inline QPoly rand_nonzero_qpoly(Rng& rng, int max_degree, int bound = 9)
{
    QPoly p;
    do
        p = rand_qpoly(rng, uniform(rng, 0, max_degree), bound);
    while (p.is_zero());
    return p;
}

inline RationalFunction rand_function(Rng& rng, int max_degree = 2, int bound = 5)
{
    RationalFunction r;
    do
        r = RationalFunction(rand_nonzero_qpoly(rng, max_degree, bound))
            / RationalFunction(rand_nonzero_qpoly(rng, max_degree, bound));
    while (r.is_zero());
    return r;
}

/// A product of small linear factors t - c times a constant: zeros stay in
/// a small, controlled set of places.
inline RationalFunction rand_supported(Rng& rng, const std::vector<int>& zeros, int max_power = 3)
{
    RationalFunction r(rand_nonzero_rational(rng, 4));
    for (int c : zeros) {
        const int e = uniform(rng, -max_power, max_power);
        const RationalFunction lin = RationalFunction::t() - RationalFunction(c);
        for (int i = 0; i < std::abs(e); ++i)
            r = e > 0 ? r * lin : r / lin;
    }
    return r;
}

inline KPoly x_poly()
{
    return KPoly::variable();
}

inline KPoly k_const(const RationalFunction& r)
{
    return KPoly(r);
}

inline KPoly from_roots(const std::vector<RationalFunction>& roots)
{
    KPoly f(RationalFunction(1));
    for (const auto& a : roots)
        f = f * (x_poly() - k_const(a));
    return f;
}

/// x (x - 1) (x - t) (x - t - 1).
inline KPoly split_quartic()
{
    const auto t = RationalFunction::t();
    return from_roots({RationalFunction(0), RationalFunction(1), t, t + RationalFunction(1)});
}

/// Roots 0, 1, t and t + c: bad places are (t), (t - 1), (t + c - 1)...
inline KPoly split_quartic_with(int c)
{
    const auto t = RationalFunction::t();
    return from_roots({RationalFunction(0), RationalFunction(1), t, t + RationalFunction(c)});
}

inline EtaleElement rand_split_element(Rng& rng, const std::vector<int>& zeros)
{
    return EtaleElement::split({rand_supported(rng, zeros), rand_supported(rng, zeros),
                                rand_supported(rng, zeros), rand_supported(rng, zeros)});
}

inline EtaleElement rand_general_element(Rng& rng, int max_degree = 1, int bound = 3)
{
    std::array<RationalFunction, 4> c;
    for (auto& v : c)
        v = uniform(rng, 0, 2) == 0 ? RationalFunction(0)
                                    : RationalFunction(rand_nonzero_qpoly(rng, max_degree, bound));
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero())
        c[0] = 1;
    return EtaleElement::general(c);
}

/// Random kernel element of a split algebra: (d1, d2, d3, d1 d2 d3) times
/// squares, so the norm is a square.
inline EtaleElement rand_split_kernel_element(Rng& rng, const std::vector<int>& zeros)
{
    const auto d1 = rand_supported(rng, zeros);
    const auto d2 = rand_supported(rng, zeros);
    const auto d3 = rand_supported(rng, zeros);
    const auto s = rand_supported(rng, zeros, 1);
    return EtaleElement::split({d1 * s * s, d2, d3, d1 * d2 * d3});
}

inline std::vector<PlaceK> linear_places(const std::vector<int>& cs)
{
    std::vector<PlaceK> out;
    for (int c : cs)
        out.push_back(PlaceK::at(Rational(c)));
    return out;
}

} // namespace brauer2::testing
