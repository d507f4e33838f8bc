#pragma once

#include <string>

#include "ksand/surfaces/models.hpp"

namespace ksand {

// Limit eps -> 0 of a rank-17 fibration along the pencil with
// k'_i = (1 - k_i)/(1 + k_i), eps' = 2 eps / ((k1 + 1)(k2 - 1)), after the
// fiber rescaling (x, y) -> (x / eps^2, y / eps^3). The rescaled coefficients
// are polynomials in e = eps^2; the value at e = 0 is recovered exactly by
// Lagrange interpolation and cross-checked with an extra node.
WeierstrassSurface rank17_degeneration_limit(const std::string& rank17_id, const Rational& k1, const Rational& k2);

}  // namespace ksand
