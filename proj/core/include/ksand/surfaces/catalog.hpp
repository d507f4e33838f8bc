#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ksand/surfaces/models.hpp"

namespace ksand {

struct CatalogEntry {
  std::string id;
  std::vector<std::string> parameters;
  std::string kind;  // weierstrass | double_cover | quartic | mirror_cubic | elliptic_curve
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& id);  // throws std::invalid_argument

SurfaceModel catalog(const std::string& id, const std::vector<Rational>& params);
WeierstrassSurface catalog_weierstrass(const std::string& id, const std::vector<Rational>& params);
AffineDoubleCover catalog_double_cover(const std::string& id, const std::vector<Rational>& params);

// Two-torsion section x-coordinate on MIRROR_G2G3 (monic form), with y = 0.
UniPoly mirror_torsion_section_x(const Rational& lambda);
// The same section as typeset, -u(4u - u^2 - 1)/(3 lambda^2); it does not lie on the surface.
UniPoly mirror_torsion_section_x_as_printed(const Rational& lambda);

// Weierstrass invariants g2, g3 of the 4X^3 - g2 X - g3 model.
UniPoly mirror_g2(const Rational& lambda);
UniPoly mirror_g3(const Rational& lambda);

}  // namespace ksand
