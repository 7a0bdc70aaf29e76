// Parser for polynomial expressions as accepted on the command line:
// "+ - * ^ ( )", integer and p/q literals, single-letter variables, and
// implicit multiplication by juxtaposition ("2a^2-4b" means 2*a^2-4*b,
// "xy" means x*y). A '/' must be followed by an integer literal; general
// polynomial division is not a thing here.

#pragma once

#include "altgamma/poly.hpp"

#include <string_view>

namespace altgamma {

Poly parse_poly(std::string_view src);

}  // namespace altgamma
