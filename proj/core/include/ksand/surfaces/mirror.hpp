#pragma once

#include <cstdint>
#include <vector>

#include "ksand/surfaces/models.hpp"

namespace ksand {

// Residual of the torsion section (x(u), 0) on MIRROR_G2G3; zero polynomial iff it lies on the surface.
UniPoly mirror_section_residual(const Rational& lambda, bool as_printed = false);

struct SubstitutionReport {
  std::uint64_t p = 0;
  Rational lambda;
  int trials = 0;
  int passes = 0;
  int failures = 0;
  int excluded = 0;  // samples where a denominator of the substitution vanished
  bool ok() const { return failures == 0 && passes > 0; }
};

// Maps sampled points of MIRROR_G2G3 over F_p into the n = 3 mirror family
// via the substitution with i = sqrt(-1) and checks the defining equation.
SubstitutionReport narumiya_shiga_substitution_check(const Rational& lambda, const PrimeFieldCtx& ctx, int trials,
                                                     std::uint64_t seed);

}  // namespace ksand
