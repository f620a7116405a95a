#include "test_support.hpp"

#include "brauer2/pipeline.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace brauer2;
using namespace brauer2::testing;

namespace {

const RationalFunction t = RationalFunction::t();

RationalFunction c(int v)
{
    return RationalFunction(v);
}

std::string read_data(const std::string& name)
{
    std::ifstream in(std::string(BRAUER2_TEST_DATA) + "/" + name);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

template <typename F>
SyntaxError syntax_error_of(F&& f)
{
    try {
        f();
    } catch (const SyntaxError& e) {
        return e;
    }
    ADD_FAILURE() << "no SyntaxError";
    return SyntaxError("none", 0, 0);
}

} // namespace

TEST(Expression, Polynomials)
{
    EXPECT_EQ(parse_xt("x*(x-1)*(x-t)*(x-t-1)"), split_quartic());
    EXPECT_EQ(parse_xt("x^4 - t"), pow(x_poly(), 4) - k_const(t));
    EXPECT_EQ(parse_xt("x^2/(t+1) - 3/2"), k_const(c(1) / (t + c(1))) * x_poly() * x_poly()
                                              - k_const(RationalFunction(Rational(3, 2))));
    EXPECT_EQ(parse_t("(t^2 - 1)/(t - 1)"), t + c(1));
    EXPECT_EQ(parse_t("t^-2 * t^3"), t);
    EXPECT_EQ(parse_t("w^4", "w"), t * t * t * t);
}

TEST(Expression, SyntaxErrorsCarryPositions)
{
    const auto e1 = syntax_error_of([] { parse_xt("x^4 - 1.5*t"); });
    EXPECT_EQ(e1.line(), 1);
    EXPECT_EQ(e1.column(), 8);
    const auto e2 = syntax_error_of([] { parse_xt("x^4 + (t", "x", "t", SourcePos{3, 5}); });
    EXPECT_EQ(e2.line(), 3);
    EXPECT_GE(e2.column(), 5);
    syntax_error_of([] { parse_t("x + 1"); });
    syntax_error_of([] { parse_xt("x^t"); });
    EXPECT_THROW(parse_xt("1 / x"), Error);
}

TEST(Expression, Places)
{
    EXPECT_EQ(parse_place("inf"), PlaceK::infinity());
    EXPECT_EQ(parse_place("infinity"), PlaceK::infinity());
    EXPECT_EQ(parse_place("(t-5)"), PlaceK::at(5));
    EXPECT_EQ(parse_place("t^2 + 1").degree(), 2);
    EXPECT_EQ(parse_place_list("(t-5), inf").size(), 2u);
    EXPECT_THROW(parse_place("t^2 - 1"), Error);
}

TEST(Expression, ElementsRoundTrip)
{
    Rng rng(301);
    const EtaleAlgebra L(split_quartic());
    EXPECT_EQ(parse_element("(t-2; t-2; 1; 1)", L), EtaleElement::split({t - c(2), t - c(2), c(1), c(1)}));
    EXPECT_EQ(parse_element("alpha^4", L), parse_element("A^4", L));
    for (int i = 0; i < 30; ++i) {
        const EtaleElement s = rand_split_element(rng, {0, 3, -2});
        EXPECT_EQ(parse_element(s.to_string(), L), s) << s.to_string();
    }
    const EtaleAlgebra M(pow(x_poly(), 4) - k_const(t));
    EXPECT_EQ(parse_element("A^4", M), EtaleElement::constant(t));
    EXPECT_THROW(parse_element("(1; 1; 1; 1)", M), NotSplit);
    for (int i = 0; i < 30; ++i) {
        const EtaleElement g = rand_general_element(rng);
        EXPECT_EQ(parse_element(g.to_string(), M), g) << g.to_string();
    }
}

TEST(Surface, ParsesFilesAndKeys)
{
    const auto spec = parse_surface(read_data("pure_quartic_component.surface"));
    EXPECT_EQ(spec.f, pow(x_poly(), 4) - k_const(t));
    ASSERT_EQ(spec.extra_places.size(), 1u);
    EXPECT_EQ(spec.extra_places[0], PlaceK::at(1));
    ASSERT_EQ(spec.components.size(), 1u);
    EXPECT_EQ(spec.components[0].phi, t * t * t * t);
    EXPECT_EQ(bad_places_of(spec).size(), 3u);

    const auto strict = parse_surface("# comment\nf = x^4 - t\nmode = strict\nprecision = 32\n");
    EXPECT_EQ(strict.mode, Mode::strict);
    EXPECT_EQ(strict.precision, 32);
}

TEST(Surface, Rejections)
{
    EXPECT_THROW(parse_surface(read_data("cubic.surface")), DegreeError);
    EXPECT_THROW(parse_surface("f = (x - t)^2 * (x^2 + 1)\n"), DegenerateModel);
    EXPECT_THROW(parse_surface("mode = strict\n"), SyntaxError);
    const auto e = syntax_error_of([] { parse_surface("f = x^4 - t\ncolour = red\n"); });
    EXPECT_EQ(e.line(), 2);
    const auto e2 = syntax_error_of([] { parse_surface("f = x^4 - t\nS_extra = (t - 1,\n"); });
    EXPECT_EQ(e2.line(), 2);
}

TEST(Pipeline, Commands)
{
    const auto spec = parse_surface(read_data("split_quartic.surface"));
    PipelineRequest r;
    r.command = Command::bad_places;
    auto rep = run_pipeline(spec, r);
    EXPECT_EQ(rep.exit_code, 0);
    EXPECT_NE(rep.output.find("bad places (4): (t), (t - 1), (t + 1), inf"), std::string::npos) << rep.output;

    r.command = Command::check;
    r.element = "(t-2; t-2; 1; 1)";
    rep = run_pipeline(spec, r);
    EXPECT_EQ(rep.exit_code, 0);
    EXPECT_NE(rep.output.find("verdict: FAIL at (t - 2)"), std::string::npos) << rep.output;

    r.element = "(t; 1; 1; 1)";
    rep = run_pipeline(spec, r);
    EXPECT_EQ(rep.exit_code, 1);

    r.command = Command::expand_split;
    r.element = "(t; t; 1; 1)";
    r.format = Format::tsv;
    rep = run_pipeline(spec, r);
    EXPECT_EQ(rep.exit_code, 0);
    EXPECT_EQ(rep.output.rfind("element\tplace\tresidue\tverdict", 0), 0u) << rep.output;

    r.command = Command::residues;
    r.format = Format::text;
    r.element = "(t-2; t-2; 1; 1)";
    r.place = "t - 2";
    rep = run_pipeline(spec, r);
    EXPECT_EQ(rep.exit_code, 0);
    EXPECT_NE(rep.output.find("(agrees)"), std::string::npos) << rep.output;
}

TEST(Pipeline, ExitCodes)
{
    EXPECT_EQ(exit_code_for(ErrorKind::unsupported_geometry), 2);
    EXPECT_EQ(exit_code_for(ErrorKind::precision_cap), 3);
    EXPECT_EQ(exit_code_for(ErrorKind::syntax), 1);
    PipelineRequest r;
    r.command = Command::enumerate;
    EXPECT_EQ(run_pipeline(parse_surface(read_data("pure_quartic.surface")), r).exit_code, 2);
    EXPECT_EQ(run_pipeline(parse_surface(read_data("pure_quartic_component.surface")), r).exit_code, 0);
}
