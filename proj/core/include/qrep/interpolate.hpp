#pragma once

#include <span>
#include <utility>

#include "qrep/laurent.hpp"

namespace qrep {

/// Unique polynomial of degree <= degree_bound through the given points.
///
/// The first degree_bound+1 points determine the polynomial; any further
/// points must lie on it exactly, otherwise interpolation_error is thrown
/// (so extra points act as validation). Also throws on too few points or
/// duplicate abscissae.
LaurentPoly lagrange_interpolate(std::span<const std::pair<Rat, Rat>> points, int degree_bound);

} // namespace qrep
