#pragma once

// Expand-and-collect reference for the geometric form: substitute
// x = sum_i y_{x,i} b_i inside B{y}, differentiate with the natural derivation
// of B{y}, expand and read off basis coordinates. Uses nothing from descent.

#include <vector>

#include "weildesc/diffpoly.hpp"

namespace weildesc {

/// Coordinates of f(x = sum_i y_{x,i} b_i) as polynomials in the y's.
std::vector<GeoPoly> expand_and_collect(const DPolyB& f, const Extension& e);

}  // namespace weildesc
