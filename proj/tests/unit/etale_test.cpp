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

/// x^4 - x^3 + t x^2 - t x + 1 = x(x - 1)(x^2 + t) + 1: K-points (0, 1), (1, 1).
KPoly pointed_quartic()
{
    return pow(x_poly(), 4) - pow(x_poly(), 3) + k_const(t) * x_poly() * x_poly()
        - k_const(t) * x_poly() + k_const(c(1));
}

KPoly pure_quartic()
{
    return pow(x_poly(), 4) - k_const(t);
}

} // namespace

TEST(Roots, SplitQuarticInCanonicalOrder)
{
    const auto r = roots_in_K(split_quartic());
    EXPECT_EQ(r, (std::vector<RationalFunction>{c(0), c(1), t, t + c(1)}));
}

TEST(Roots, RootsWithDenominators)
{
    const KPoly f = (x_poly() - k_const(c(1) / t)) * (x_poly() - k_const(t / c(2)))
        * (x_poly() * x_poly() + k_const(c(1)));
    const auto r = roots_in_K(f);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_TRUE((r[0] == c(1) / t && r[1] == t / c(2)) || (r[1] == c(1) / t && r[0] == t / c(2)));
    EXPECT_TRUE(roots_in_K(pure_quartic()).empty());
}

TEST(Roots, GeometricAndStrictRationalRoots)
{
    EXPECT_FALSE(has_rational_root(pure_quartic(), Mode::geometric));
    const KPoly f = (x_poly() * x_poly() - k_const(c(2))) * (x_poly() * x_poly() - k_const(t));
    EXPECT_TRUE(has_rational_root(f, Mode::geometric));
    EXPECT_FALSE(has_rational_root(f, Mode::strict));
    EXPECT_TRUE(has_rational_root(split_quartic(), Mode::strict));
}

TEST(Norm, Examples)
{
    const EtaleAlgebra L(pure_quartic());
    EXPECT_EQ(norm(EtaleElement::general({c(0), c(1), c(0), c(0)}), L), -t);
    EXPECT_EQ(norm(EtaleElement::general({c(0), c(0), c(1), c(0)}), L), t * t);
    const EtaleAlgebra M(split_quartic());
    EXPECT_EQ(norm(EtaleElement::split({t, t, c(1), c(1)}), M), t * t);
    EXPECT_THROW(norm(EtaleElement::general({c(0), c(0), c(0), c(0)}), L), ZeroDivisor);
}

TEST(Norm, MultiplicativeProperty)
{
    Rng rng(101);
    for (const KPoly& f : {pure_quartic(), split_quartic(), pointed_quartic()}) {
        const EtaleAlgebra L(f);
        for (int i = 0; i < 30; ++i) {
            const EtaleElement a = rand_general_element(rng);
            const EtaleElement b = rand_general_element(rng);
            if (is_zero_divisor(a, L) || is_zero_divisor(b, L))
                continue;
            EXPECT_EQ(norm(multiply(a, b, L), L), norm(a, L) * norm(b, L));
            EXPECT_EQ(multiply(a, inverse(a, L), L), EtaleElement::constant(c(1)));
        }
    }
}

TEST(Forms, SplitGeneralRoundTrip)
{
    Rng rng(102);
    const EtaleAlgebra L(split_quartic());
    for (int i = 0; i < 30; ++i) {
        const EtaleElement e = rand_split_element(rng, {0, 1, -1, 2});
        const EtaleElement g = to_general(e, L);
        EXPECT_EQ(to_split(g, L), e);
        EXPECT_EQ(norm(g, L), norm(e, L));
    }
    const EtaleAlgebra M(pure_quartic());
    EXPECT_THROW(to_split(EtaleElement::constant(c(1)), M), NotSplit);
}

TEST(Kernel, SplitExamples)
{
    const EtaleAlgebra L(split_quartic());
    const auto in = in_kernel_of_norm(EtaleElement::split({t, t, c(1), c(1)}), L, Mode::geometric);
    ASSERT_TRUE(in.in_kernel);
    EXPECT_EQ(in.kernel_class->to_string(), "(1; 1; t; t)");
    const auto out = in_kernel_of_norm(EtaleElement::split({t, c(1), c(1), c(1)}), L, Mode::geometric);
    ASSERT_FALSE(out.in_kernel);
    EXPECT_EQ(out.witness->to_string(), "t");
    EXPECT_TRUE(make_kernel_class(EtaleElement::split({t, t, t, t}), L, Mode::geometric).is_identity());
}

TEST(Kernel, MembershipAndParitiesIgnoreScalarsAndSquares)
{
    Rng rng(103);
    // Nontrivial kernel elements: A^2 + 1 has norm (1 - t)^2 on x^4 - t,
    // A^2 - A has norm 1 on the pointed quartic.
    const std::vector<std::pair<KPoly, EtaleElement>> cases{
        {pure_quartic(), EtaleElement::general({c(1), c(0), c(1), c(0)})},
        {pointed_quartic(), EtaleElement::general({c(0), c(-1), c(1), c(0)})},
        {split_quartic(), EtaleElement::split({t, t, c(1), c(1)})}};
    for (const auto& [f, ell] : cases) {
        const EtaleAlgebra L(f);
        const BadPlaceSet S = compute_bad_places(f);
        for (int i = 0; i < 25; ++i) {
            const EtaleElement mu = rand_general_element(rng);
            if (is_zero_divisor(mu, L))
                continue;
            const RationalFunction m = rand_supported(rng, {0, 3});
            const EtaleElement moved = scale(multiply(ell, multiply(mu, mu, L), L), m);
            for (Mode mode : {Mode::geometric, Mode::strict}) {
                ASSERT_TRUE(in_kernel_of_norm(ell, L, mode).in_kernel);
                ASSERT_TRUE(in_kernel_of_norm(moved, L, mode).in_kernel);
            }
            // Split representatives are canonical; General ones only up to K^x.
            if (L.is_split())
                EXPECT_EQ(make_kernel_class(ell, L, Mode::geometric), make_kernel_class(moved, L, Mode::geometric));
            EXPECT_EQ(make_kernel_class(scale(ell, m), L, Mode::strict), make_kernel_class(ell, L, Mode::strict));
            EXPECT_EQ(is_S_unramified(ell, L, S).unramified, is_S_unramified(moved, L, S).unramified);
            for (const auto& v : candidate_places(moved, L, S)) {
                const auto a = valuations_above(ell, L, v);
                const auto b = valuations_above(moved, L, v);
                ASSERT_EQ(a.size(), b.size());
                for (std::size_t j = 0; j < a.size(); ++j)
                    EXPECT_EQ((a[j] - b[j]) % 2 == 0, (a[0] - b[0]) % 2 == 0) << v.to_string();
            }
        }
    }
}

TEST(Kernel, SplitClassInvariance)
{
    Rng rng(104);
    const EtaleAlgebra L(split_quartic());
    for (int i = 0; i < 50; ++i) {
        const EtaleElement ell = rand_split_kernel_element(rng, {0, 1, -1, 5});
        const EtaleElement mu = rand_split_element(rng, {0, 2, 7});
        const RationalFunction m = rand_supported(rng, {1, 3});
        const EtaleElement moved = scale(multiply(ell, multiply(mu, mu, L), L), m);
        EXPECT_EQ(make_kernel_class(ell, L, Mode::geometric), make_kernel_class(moved, L, Mode::geometric));
    }
}

TEST(XMinusAlpha, PointedQuartic)
{
    const EtaleAlgebra L(pointed_quartic());
    AffineDivisor D;
    D.terms.push_back({AffinePoint{c(0), c(1)}, 1});
    D.terms.push_back({AffinePoint{c(1), c(1)}, 1});
    // (0 - alpha)(1 - alpha) = alpha^2 - alpha; its norm is f(0) f(1) = 1.
    const EtaleElement expected = EtaleElement::general({c(0), c(-1), c(1), c(0)});
    EXPECT_EQ(norm(expected, L), c(1));
    for (Mode mode : {Mode::geometric, Mode::strict})
        EXPECT_EQ(x_minus_alpha(D, L, mode), make_kernel_class(expected, L, mode));
}

TEST(XMinusAlpha, InvalidDivisors)
{
    const EtaleAlgebra L(pointed_quartic());
    AffineDivisor odd;
    odd.terms.push_back({AffinePoint{c(0), c(1)}, 1});
    EXPECT_THROW(x_minus_alpha(odd, L, Mode::geometric), InvalidDivisor);
    AffineDivisor off;
    off.terms.push_back({AffinePoint{c(0), c(2)}, 2});
    EXPECT_THROW(x_minus_alpha(off, L, Mode::geometric), InvalidDivisor);
    const EtaleAlgebra M(split_quartic());
    AffineDivisor ramified;
    ramified.terms.push_back({AffinePoint{c(1), c(0)}, 2});
    EXPECT_THROW(x_minus_alpha(ramified, M, Mode::geometric), InvalidDivisor);
}

TEST(Unramified, PlantedWitness)
{
    const EtaleAlgebra L(split_quartic());
    const BadPlaceSet S = compute_bad_places(L.f());
    const auto u = is_S_unramified(EtaleElement::split({t - c(2), t - c(2), c(1), c(1)}), L, S);
    ASSERT_FALSE(u.unramified);
    EXPECT_EQ(u.witness->place, PlaceK::at(2));
    std::vector<int> v;
    for (const auto& p : u.witness->valuations)
        v.push_back(p.valuation);
    EXPECT_EQ(v, (std::vector<int>{1, 1, 0, 0}));
    EXPECT_TRUE(is_S_unramified(EtaleElement::split({t, t, c(1), c(1)}), L, S).unramified);
}

TEST(Unramified, SplitAndSeriesRoutesAgree)
{
    Rng rng(105);
    const EtaleAlgebra L(split_quartic());
    const BadPlaceSet S = compute_bad_places(L.f());
    for (int i = 0; i < 30; ++i) {
        const EtaleElement e = rand_split_element(rng, {0, 2, -3});
        const auto a = is_S_unramified(e, L, S);
        const auto b = is_S_unramified(to_general(e, L), L, S);
        ASSERT_EQ(a.unramified, b.unramified) << e.to_string();
        if (!a.unramified) {
            EXPECT_EQ(a.witness->place, b.witness->place);
            std::multiset<int> va, vb;
            for (const auto& p : a.witness->valuations)
                va.insert(p.valuation);
            for (const auto& p : b.witness->valuations)
                vb.insert(p.valuation);
            EXPECT_EQ(va, vb);
        }
    }
}

TEST(Unramified, NonSplitFiber)
{
    const EtaleAlgebra L(pure_quartic());
    BadPlaceSet S = compute_bad_places(L.f());
    const EtaleElement a2 = EtaleElement::general({c(0), c(0), c(1), c(0)});
    EXPECT_EQ(valuations_above(a2, L, PlaceK::at(1)), (std::vector<int>{0, 0, 0}));
    const EtaleElement e = EtaleElement::general({-t, c(0), c(1), c(0)});
    EXPECT_EQ(valuations_above(e, L, PlaceK::at(1)), (std::vector<int>{1, 1, 0}));
    EXPECT_FALSE(is_S_unramified(e, L, S).unramified);
}
