#pragma once

#include <string_view>

#include "bajra/maps.hpp"

namespace bajra {

/// Builds a map from its CLI name:
///   gini:p,q   power:p   hyperboloid   quasi:<expr>[,a,b]
///   ratio:<expr1>,<expr2>,<a>,<b>
/// Expressions are functions of x (a bare `ln` or `exp` means ln(x), exp(x));
/// `quasi` defaults to the interval (0, inf).
/// Endpoints accept `inf` and `-inf`. Throws ParseError or the map's own
/// construction errors.
MapPtr make_map(std::string_view spec);

}  // namespace bajra
