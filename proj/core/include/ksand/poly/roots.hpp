#pragma once

#include <utility>
#include <vector>

#include "ksand/poly/polynomial.hpp"

namespace ksand {

// Order of vanishing reported for the zero polynomial.
inline constexpr int kInfiniteOrder = 1 << 20;

// Integer multiple with coprime integer coefficients and positive leading coefficient.
UniPoly primitive_part(const UniPoly& f);

// Distinct rational roots in ascending order. Exact (Hensel lifting plus
// verification), no floating point.
std::vector<Rational> rational_roots(const UniPoly& f);

// Multiplicity of r as a root of f; kInfiniteOrder for f = 0.
int order_at(const UniPoly& f, const Rational& r);

// Yun's algorithm: f = lc * prod P_m^m with monic squarefree, pairwise coprime P_m.
// Only factors with positive degree are returned, ascending in m.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

// Divide out the linear factor (u - r) once; exact.
UniPoly deflate(const UniPoly& f, const Rational& r);

}  // namespace ksand
