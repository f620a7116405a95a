#pragma once

#include "brauer2/enumerate.hpp"
#include "brauer2/expression.hpp"

#include <string>
#include <vector>

namespace brauer2 {

/// A surface y^2 = f(x, t) with its run settings.
struct SurfaceSpec {
    KPoly f;
    std::vector<PlaceK> extra_places;
    Mode mode = Mode::geometric;
    int precision = kDefaultPrecisionCap;
    std::vector<ComponentParametrization> components;
};

/// Key-value lines; '#' starts a comment:
///   f = x*(x-1)*(x-t)*(x-t-1)
///   S_extra = (t-5), inf
///   mode = geometric | strict
///   precision = 512
///   component = FACTOR ; PHI ; PSI ; CHI
/// FACTOR is a factor of f in x and t, PHI and PSI are rational functions
/// in w, CHI is a rational function in x over K. Throws SyntaxError,
/// DegreeError (deg_x f != 4) or DegenerateModel (disc_x f = 0).
SurfaceSpec parse_surface(const std::string& contents);

/// S: the bad places of f plus the extra places.
BadPlaceSet bad_places_of(const SurfaceSpec& spec);

} // namespace brauer2
