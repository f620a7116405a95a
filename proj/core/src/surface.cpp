#include "brauer2/surface.hpp"

#include <cctype>
#include <sstream>

namespace brauer2 {

namespace {

std::size_t skip_space(const std::string& s, std::size_t i)
{
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
    return i;
}

std::string rtrim(std::string s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    return s;
}

ComponentParametrization parse_component(const std::string& value, SourcePos at)
{
    std::vector<std::pair<std::string, int>> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= value.size(); ++i)
        if (i == value.size() || value[i] == ';') {
            parts.emplace_back(value.substr(start, i - start), static_cast<int>(start));
            start = i + 1;
        }
    if (parts.size() != 4)
        throw SyntaxError("component needs FACTOR ; PHI ; PSI ; CHI", at.line, at.column);
    auto pos = [&](std::size_t k) { return SourcePos{at.line, at.column + parts[k].second}; };
    ComponentParametrization c;
    c.factor = parse_xt(parts[0].first, "x", "t", pos(0));
    c.phi = parse_t(parts[1].first, "w", pos(1));
    c.psi = parse_t(parts[2].first, "w", pos(2));
    const XFraction chi = parse_x_fraction(parts[3].first, {"x"}, "t", pos(3));
    c.chi_num = chi.num;
    c.chi_den = chi.den;
    validate_component(c);
    return c;
}

} // namespace

SurfaceSpec parse_surface(const std::string& contents)
{
    SurfaceSpec spec;
    bool have_f = false;
    std::istringstream in(contents);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = rtrim(raw.substr(0, raw.find('#')));
        const std::size_t k0 = skip_space(line, 0);
        if (k0 == line.size())
            continue;
        const std::size_t eq = line.find('=', k0);
        if (eq == std::string::npos)
            throw SyntaxError("expected 'key = value'", line_no, static_cast<int>(k0) + 1);
        const std::string key = rtrim(line.substr(k0, eq - k0));
        const std::size_t v0 = skip_space(line, eq + 1);
        const std::string value = line.substr(v0);
        const SourcePos at{line_no, static_cast<int>(v0) + 1};
        if (value.empty())
            throw SyntaxError("missing value for '" + key + "'", line_no, static_cast<int>(eq) + 2);
        if (key == "f") {
            if (have_f)
                throw SyntaxError("f given twice", line_no, static_cast<int>(k0) + 1);
            spec.f = parse_xt(value, "x", "t", at);
            have_f = true;
        } else if (key == "S_extra") {
            for (auto& v : parse_place_list(value, at))
                spec.extra_places.push_back(std::move(v));
        } else if (key == "mode") {
            if (value == "geometric")
                spec.mode = Mode::geometric;
            else if (value == "strict")
                spec.mode = Mode::strict;
            else
                throw SyntaxError("mode is geometric or strict", at.line, at.column);
        } else if (key == "precision") {
            std::size_t used = 0;
            int p = 0;
            try {
                p = std::stoi(value, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != value.size() || p < 1)
                throw SyntaxError("precision is a positive integer", at.line, at.column);
            spec.precision = p;
        } else if (key == "component") {
            spec.components.push_back(parse_component(value, at));
        } else {
            throw SyntaxError("unknown key '" + key + "'", line_no, static_cast<int>(k0) + 1);
        }
    }
    if (!have_f)
        throw SyntaxError("no 'f = ...' line", line_no == 0 ? 1 : line_no, 1);
    if (spec.f.degree() != 4)
        throw DegreeError("deg_x f must be 4, got " + std::to_string(spec.f.degree()));
    validate_model(spec.f);
    return spec;
}

BadPlaceSet bad_places_of(const SurfaceSpec& spec)
{
    BadPlaceSet s = compute_bad_places(spec.f);
    for (const auto& v : spec.extra_places)
        s.add(v);
    return s;
}

} // namespace brauer2
