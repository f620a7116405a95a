// One PASS/FAIL line per criterion; exit status is nonzero if any fails.
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

using namespace brauer2;
using namespace brauer2::testing;

namespace {

const RationalFunction t = RationalFunction::t();

RationalFunction c(int v)
{
    return RationalFunction(v);
}

/// Collects the first few mismatches of a criterion.
struct Check {
    int checked = 0;
    int failed = 0;
    std::ostringstream first;

    void expect(bool ok, const std::string& what)
    {
        ++checked;
        if (ok)
            return;
        if (failed++ == 0)
            first << what;
    }
};

std::vector<PlaceK> good_places(const std::vector<PlaceK>& extra, const BadPlaceSet& S,
                                std::vector<PlaceK> base)
{
    base.insert(base.end(), extra.begin(), extra.end());
    std::set<PlaceK> out;
    for (const auto& v : base)
        if (!v.is_infinity() && !S.contains(v))
            out.insert(v);
    return {out.begin(), out.end()};
}

KPoly scaled_quartic(const RationalFunction& u)
{
    return from_roots({c(0), u, -u, c(2) * u});
}

/// Criterion 1: split_h_expansion + residue_profile against vertical_residue_of_h.
void split_oracle(Check& ck)
{
    Rng rng(1001);
    const std::vector<std::pair<KPoly, std::vector<int>>> surfaces{
        {split_quartic(), {0, 2, -3, 5}},
        {split_quartic_with(3), {0, 1, 4, -2}},
        {scaled_quartic(t * (t - c(1))), {0, 1, 3, -4}}};
    for (const auto& [f, zeros] : surfaces) {
        const EtaleAlgebra L(f);
        const BadPlaceSet S = compute_bad_places(f);
        for (int i = 0; i < 60; ++i) {
            const KernelClass k = make_kernel_class(rand_split_kernel_element(rng, zeros), L, Mode::geometric);
            const EtaleElement& ell = k.representative();
            const auto places = good_places(candidate_places(ell, L, S), S, linear_places({7, -6}));
            const SymbolSum sum = split_h_expansion(k, L);
            for (Mode mode : {Mode::geometric, Mode::strict}) {
                const auto cert = residue_profile(sum, places, L, mode);
                for (std::size_t j = 0; j < places.size(); ++j) {
                    // The General form takes the local series route.
                    const SquareClass direct = vertical_residue_of_h(to_general(ell, L), L, S, places[j], mode);
                    ck.expect(cert.entries[j].residue == direct
                                  && vertical_residue_of_h(ell, L, S, places[j], mode) == direct,
                              ell.to_string() + " at " + places[j].to_string());
                }
            }
        }
    }
}

/// Criterion 2: the profile of ell mu^2 m equals the profile of ell.
void well_defined(Check& ck)
{
    Rng rng(1002);
    const EtaleAlgebra split(split_quartic());
    const EtaleAlgebra pure(pow(x_poly(), 4) - k_const(t));
    const BadPlaceSet S_split = compute_bad_places(split.f());
    const BadPlaceSet S_pure = compute_bad_places(pure.f());
    int done = 0;
    while (done < 200) {
        const bool use_split = done % 2 == 0;
        const EtaleAlgebra& L = use_split ? split : pure;
        const BadPlaceSet& S = use_split ? S_split : S_pure;
        EtaleElement ell = use_split
            ? rand_split_kernel_element(rng, {0, 2, -3})
            // A^2 + r has norm (r^2 - t)^2.
            : EtaleElement::general({rand_supported(rng, {2, -1}, 1), c(0), c(1), c(0)});
        const EtaleElement mu = use_split ? rand_split_element(rng, {3, -2}) : rand_general_element(rng);
        if (is_zero_divisor(mu, L) || is_zero_divisor(ell, L))
            continue;
        const RationalFunction m = rand_supported(rng, {4, 1}, 2);
        const EtaleElement moved = scale(multiply(ell, multiply(mu, mu, L), L), m);
        std::vector<PlaceK> cands = candidate_places(ell, L, S);
        const auto more = candidate_places(moved, L, S);
        cands.insert(cands.end(), more.begin(), more.end());
        for (const auto& v : good_places(cands, S, linear_places({3, 4, 5})))
            for (Mode mode : {Mode::geometric, Mode::strict})
                ck.expect(vertical_residue_of_h(ell, L, S, v, mode) == vertical_residue_of_h(moved, L, S, v, mode),
                          ell.to_string() + " vs " + moved.to_string() + " at " + v.to_string());
        // Split representatives are canonical, so the classes must coincide.
        if (use_split)
            ck.expect(make_kernel_class(ell, L, Mode::geometric) == make_kernel_class(moved, L, Mode::geometric),
                      "class of " + ell.to_string());
        ++done;
    }
}

/// Criterion 3: every sampled kernel element lies in Br C.
void br_c(Check& ck)
{
    Rng rng(1003);
    const EtaleAlgebra split(split_quartic());
    const EtaleAlgebra pure(pow(x_poly(), 4) - k_const(t));
    for (int i = 0; i < 100; ++i) {
        const bool use_split = i % 2 == 0;
        const EtaleAlgebra& L = use_split ? split : pure;
        const EtaleElement ell = use_split
            ? rand_split_kernel_element(rng, {0, 1, 2, -5})
            : EtaleElement::general({RationalFunction(rand_nonzero_qpoly(rng, 2, 5)), c(0), c(1), c(0)});
        if (is_zero_divisor(ell, L))
            continue;
        const auto in = in_kernel_of_norm(ell, L, Mode::geometric);
        ck.expect(in.in_kernel, ell.to_string() + " not in ker N");
        if (!in.in_kernel)
            continue;
        const auto cert = verify_in_Br_C(*in.kernel_class, L);
        ck.expect(cert.unramified, ell.to_string() + " ramified");
        const SquareClass at_inf = square_class(c(1) / norm(in.kernel_class->representative(), L), Mode::geometric);
        ck.expect(cert.entries.size() == 2 && cert.entries[1].residue == at_inf && at_inf.is_identity(),
                  ell.to_string() + " infinity residue");
    }
}

/// Criterion 4: the planted ramified element.
void planted(Check& ck)
{
    const EtaleAlgebra L(split_quartic());
    const BadPlaceSet S = compute_bad_places(L.f());
    const EtaleElement e = EtaleElement::split({t - c(2), t - c(2), c(1), c(1)});
    const auto rows = br_X_filter({e}, L, S, Mode::geometric);
    ck.expect(rows.size() == 1 && rows[0].verdict == Verdict::fail, "planted element not rejected");
    if (rows.empty() || rows[0].verdict != Verdict::fail)
        return;
    ck.expect(rows[0].place == PlaceK::at(2), "wrong place");
    const auto fiber = fiber_at(L, PlaceK::at(2));
    const QPoly x = QPoly::variable();
    const NfPoly g = to_nf_poly(x * (x - QPoly(Rational(1))), fiber->residue_field);
    const SquareClass expected = SquareClass::of_fiber(g, fiber, Mode::geometric);
    ck.expect(rows[0].residue == expected, "residue " + rows[0].residue->to_string());
    ck.expect(rows[0].reverified, "not re-verified");
    ck.expect(!is_square_in_fiber_field(g, fiber, Mode::geometric), "x(x - 1) is a square");
}

/// Criterion 5: enumeration against a parity brute force.
void enumeration(Check& ck)
{
    const std::vector<std::pair<KPoly, std::size_t>> surfaces{
        {scaled_quartic(t), 1}, {scaled_quartic(t * t - c(2)), 1},
        {scaled_quartic(t * (t - c(1))), 2}, {split_quartic(), 3}};
    for (const auto& [f, m_expected] : surfaces) {
        const EtaleAlgebra L(f);
        const BadPlaceSet S = compute_bad_places(f);
        const auto places = S.finite_places();
        const std::size_t m = places.size();
        ck.expect(m == m_expected, "bad set size " + std::to_string(m));
        auto key = [&](const EtaleElement& e) {
            std::vector<int> k;
            for (std::size_t i = 1; i < 4; ++i)
                for (const auto& v : places)
                    k.push_back(((valuation_at(e[i] / e[0], v) % 2) + 2) % 2);
            return k;
        };
        // Tuples (1, d2, d3, d4) of S-supported squarefree parts: every
        // class mod scaling and squares has exactly one such form.
        std::set<std::vector<int>> brute;
        for (std::size_t mask = 0; mask < (std::size_t(1) << (3 * m)); ++mask) {
            std::array<RationalFunction, 4> d{c(1), c(1), c(1), c(1)};
            for (std::size_t b = 0; b < 3 * m; ++b)
                if (mask >> b & 1)
                    d[1 + b / m] *= RationalFunction(places[b % m].poly());
            const EtaleElement e = EtaleElement::split(d);
            if (is_square_in_K(norm(e, L), Mode::geometric).is_square)
                brute.insert(key(e));
        }
        const auto classes = enumerate_unramified_kernel(L, S);
        std::set<std::vector<int>> got;
        for (const auto& k : classes)
            got.insert(key(k.representative()));
        ck.expect(classes.size() == (std::size_t(1) << (2 * m)),
                  std::to_string(classes.size()) + " classes for m = " + std::to_string(m));
        ck.expect(got.size() == classes.size() && got == brute, "brute force mismatch for m = " + std::to_string(m));
    }
}

/// Criterion 6: symbol calculus.
void symbols(Check& ck)
{
    Rng rng(1006);
    auto support = [](const std::vector<RationalFunction>& fs) {
        std::set<PlaceK> out{PlaceK::infinity()};
        for (std::size_t i = 0; i + 1 < fs.size(); ++i)
            for (const auto& v : residue_support(QuaternionSymbol(fs[i], fs[i + 1])))
                out.insert(v);
        return out;
    };
    for (int i = 0; i < 500; ++i) {
        const auto a1 = rand_function(rng), a2 = rand_function(rng), b = rand_function(rng);
        for (const auto& v : support({a1, b, a2}))
            ck.expect(tame_residue(QuaternionSymbol(a1 * a2, b), v, Mode::strict)
                          == tame_residue(QuaternionSymbol(a1, b), v, Mode::strict)
                              * tame_residue(QuaternionSymbol(a2, b), v, Mode::strict),
                      "bimultiplicativity at " + v.to_string());
    }
    for (int i = 0; i < 500; ++i) {
        const auto a = rand_function(rng);
        if (a == c(1))
            continue;
        for (const auto& v : support({a, c(1) - a}))
            ck.expect(tame_residue(QuaternionSymbol(a, c(1) - a), v, Mode::strict).is_identity(),
                      "Steinberg for " + to_string(a) + " at " + v.to_string());
    }
    for (int i = 0; i < 500; ++i) {
        const QuaternionSymbol s(rand_function(rng, 3), rand_function(rng, 3));
        ck.expect(reciprocity_product(s, Mode::strict).is_identity(), "reciprocity for " + s.to_string());
    }
}

/// Criterion 7: foundation invariants.
void foundation(Check& ck)
{
    Rng rng(1007);
    for (int i = 0; i < 200; ++i) {
        QPoly p(Rational(1));
        for (int k = uniform(rng, 1, 4); k > 0; --k)
            p = p * rand_nonzero_qpoly(rng, 3, 6);
        if (p.degree() < 1)
            continue;
        const auto fs = factor_over_rationals(p);
        bool ok = expand(fs, p.leading()) == p;
        for (const auto& f : fs)
            ok = ok && is_irreducible(f.factor);
        ck.expect(ok, "factor round trip");
    }
    for (Mode mode : {Mode::geometric, Mode::strict})
        for (int i = 0; i < 200; ++i) {
            const auto a = rand_function(rng), b = rand_function(rng);
            ck.expect(square_class(a * b, mode) == square_class(a, mode) * square_class(b, mode),
                      "square-class homomorphism");
        }
    for (int i = 0; i < 200; ++i) {
        const RationalFunction r = rand_function(rng, 4, 6);
        int degree = valuation_at(r, PlaceK::infinity());
        const QPoly support = r.num() * r.den();
        if (support.degree() > 0)
            for (const auto& v : zeros_of(support))
                degree += v.degree() * valuation_at(r, v);
        ck.expect(degree == 0, "principal divisor of " + to_string(r));
    }
    int checked = 0;
    while (checked < 40) {
        std::vector<RationalFunction> cs{c(1)};
        for (int k = 0; k < 4; ++k)
            cs.insert(cs.begin(), RationalFunction(rand_qpoly(rng, uniform(rng, 0, 2), 4)));
        const KPoly f{std::vector<RationalFunction>(cs)};
        if (f.degree() != 4 || discriminant_K(f).is_zero())
            continue;
        const BadPlaceSet S = compute_bad_places(f);
        const PlaceK v = PlaceK::at(Rational(uniform(rng, -6, 6)));
        if (S.contains(v))
            continue;
        int sum = 0;
        for (const auto& p : local_splitting(f, v, S))
            sum += p.residue_degree();
        ck.expect(sum == 4, "degree sum at " + v.to_string());
        ++checked;
    }
}

bool run(int n, const char* name, double budget_s, const std::function<void(Check&)>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Check ck;
    std::string error;
    try {
        body(ck);
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && ck.failed == 0 && ck.checked > 0 && secs <= budget_s;
    std::printf("%s criterion %d (%s): %d checks, %d failed, %.2fs of %.0fs", pass ? "PASS" : "FAIL", n, name,
                ck.checked, ck.failed, secs, budget_s);
    if (!error.empty())
        std::printf("; exception: %s", error.c_str());
    else if (ck.failed > 0)
        std::printf("; first: %s", ck.first.str().c_str());
    std::printf("\n");
    std::fflush(stdout);
    return pass;
}

} // namespace

int main()
{
    bool ok = true;
    ok &= run(1, "split-case oracle equivalence", 120, split_oracle);
    ok &= run(2, "well-definedness of h", 120, well_defined);
    ok &= run(3, "Br C membership", 60, br_c);
    ok &= run(4, "planted element rejected", 10, planted);
    ok &= run(5, "enumeration is complete", 60, enumeration);
    ok &= run(6, "symbol calculus laws", 120, symbols);
    ok &= run(7, "foundation invariants", 120, foundation);
    return ok ? 0 : 1;
}
