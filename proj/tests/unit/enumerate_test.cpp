#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace brauer2;
using namespace brauer2::testing;

namespace {

const RationalFunction t = RationalFunction::t();

RationalFunction c(int v)
{
    return RationalFunction(v);
}

/// Roots 0, u, -u, 2u: the bad places are the zeros and poles of u.
KPoly scaled_quartic(const RationalFunction& u)
{
    return from_roots({c(0), u, -u, c(2) * u});
}

/// Parity vector of a class over the finite places of S, coordinates 2..4
/// after dividing by the first.
std::vector<int> parity_key(const EtaleElement& e, const std::vector<PlaceK>& places)
{
    std::vector<int> key;
    for (std::size_t i = 1; i < 4; ++i)
        for (const auto& v : places)
            key.push_back(((valuation_at(e[i] / e[0], v) % 2) + 2) % 2);
    return key;
}

} // namespace

TEST(Enumerate, SplitQuarticHas64Classes)
{
    const EtaleAlgebra L(split_quartic());
    const BadPlaceSet S = compute_bad_places(L.f());
    const auto classes = enumerate_unramified_kernel(L, S);
    ASSERT_EQ(classes.size(), 64u);
    EXPECT_TRUE(classes.front().is_identity());
    for (std::size_t i = 0; i + 1 < classes.size(); ++i)
        EXPECT_LT(canonical_compare(classes[i].representative(), classes[i + 1].representative()), 0);
    for (const auto& k : classes) {
        EXPECT_TRUE(in_kernel_of_norm(k.representative(), L, Mode::geometric).in_kernel);
        EXPECT_TRUE(is_S_unramified(k, L, S).unramified);
    }
    EXPECT_EQ(enumerate_by_components(L, S, {}), classes);
}

TEST(Enumerate, MatchesParityBruteForce)
{
    for (const RationalFunction& u : {t, t * (t - c(1)), t * t - c(2)}) {
        const EtaleAlgebra L(scaled_quartic(u));
        const BadPlaceSet S = compute_bad_places(L.f());
        const auto places = S.finite_places();
        const std::size_t m = places.size();
        std::set<std::vector<int>> brute;
        const std::size_t n = 3 * m;
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            // Coordinates 2..4 from the mask; coordinate 1 is 1.
            std::array<RationalFunction, 4> d{c(1), c(1), c(1), c(1)};
            for (std::size_t b = 0; b < n; ++b)
                if (mask >> b & 1)
                    d[1 + b / m] *= RationalFunction(places[b % m].poly());
            const EtaleElement e = EtaleElement::split(d);
            if (is_square_in_K(norm(e, L), Mode::geometric).is_square)
                brute.insert(parity_key(e, places));
        }
        std::set<std::vector<int>> enumerated;
        for (const auto& k : enumerate_unramified_kernel(L, S))
            enumerated.insert(parity_key(k.representative(), places));
        EXPECT_EQ(enumerated.size(), std::size_t(1) << (2 * m)) << to_string(u);
        EXPECT_EQ(enumerated, brute) << to_string(u);
    }
}

TEST(Enumerate, PureQuarticNeedsItsComponent)
{
    const EtaleAlgebra L(pow(x_poly(), 4) - k_const(t));
    BadPlaceSet S = compute_bad_places(L.f());
    S.add(PlaceK::at(1));
    EXPECT_THROW(enumerate_unramified_kernel(L, S), UnsupportedGeometry);
    const ComponentParametrization z{L.f(), t * t * t * t, t, x_poly(), KPoly(c(1))};
    const auto classes = enumerate_unramified_kernel(L, S, Mode::geometric, {z});
    ASSERT_EQ(classes.size(), 2u);
    EXPECT_EQ(classes[0].to_string(), "1");
    EXPECT_EQ(classes[1].to_string(), "A^2 + 1");
    EXPECT_THROW(enumerate_unramified_kernel(L, S, Mode::strict, {z}), UnsupportedGeometry);
}

TEST(Enumerate, TwoConicComponents)
{
    const KPoly f = (x_poly() * x_poly() - k_const(t)) * (x_poly() * x_poly() - k_const(t + c(1)));
    const EtaleAlgebra L(f);
    const BadPlaceSet S = compute_bad_places(f);
    const ComponentParametrization z1{x_poly() * x_poly() - k_const(t), t * t, t, x_poly(), KPoly(c(1))};
    const ComponentParametrization z2{x_poly() * x_poly() - k_const(t + c(1)), t * t - c(1), t,
                                      x_poly(), KPoly(c(1))};
    const auto classes = enumerate_unramified_kernel(L, S, Mode::geometric, {z1, z2});
    ASSERT_EQ(classes.size(), 2u);
    for (const auto& k : classes)
        EXPECT_TRUE(is_S_unramified(k, L, S).unramified);
}

TEST(Enumerate, RejectsWrongComponents)
{
    // phi must have degree deg_x(factor).
    const ComponentParametrization bad{pow(x_poly(), 4) - k_const(t), t * t, t, x_poly(), KPoly(c(1))};
    EXPECT_THROW(validate_component(bad), InvalidArgument);
    // x = psi(w) must lie on the factor.
    const ComponentParametrization off{pow(x_poly(), 4) - k_const(t), t * t * t * t, t + c(1),
                                       x_poly(), KPoly(c(1))};
    EXPECT_THROW(validate_component(off), InvalidArgument);
    EXPECT_NO_THROW(validate_component(linear_component(t + c(1))));
}
