// JSON form of a polynomial:
//   {"vars":["x","y"],"terms":[{"exp":[1,2],"coef":"3/2"}, ...]}
// vars lists the variables present in name order; each term's exp array is
// aligned with vars; coefficients are exact "p/q" strings ("p" when q = 1);
// terms appear in canonical order.

#pragma once

#include "altgamma/poly.hpp"

#include <json.hpp>

namespace altgamma {

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace altgamma
