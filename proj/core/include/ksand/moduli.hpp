#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "ksand/arith/quad_ext.hpp"
#include "ksand/arith/rational.hpp"

namespace ksand {

// Raised when an input sits on a denominator or degeneracy locus; the message
// names the vanishing factor.
struct DegenerateInput : std::domain_error {
  using std::domain_error::domain_error;
};

// Branch points of y^2 = x(x-1)(x-l1)(x-l2)(x-l3).
struct RosenhainModuli {
  Rational l1, l2, l3;
};

void validate_rosenhain(const RosenhainModuli& lam);

using Triple = std::array<QuadExt, 3>;

struct LevelTwoModuli {
  Triple L;
  std::optional<QuadExt> l;  // sqrt(l1 l2 l3) with the chosen sign, when known

  bool is_rational() const;
  std::array<Rational, 3> rational() const;  // throws if some entry is irrational
};

struct KummerQuarticParams {
  Rational A, B, C, D;
  // D^2 - (A^2 + B^2 + C^2 + ABC - 4)
  Rational identity_residual() const;
};

LevelTwoModuli level_two_from_rosenhain(const RosenhainModuli& lam, int sign = 1);

// Right-hand Richelot column; the map is its own inverse.
Triple richelot_transform(const Triple& L);
LevelTwoModuli richelot_transform(const LevelTwoModuli& L);

KummerQuarticParams kummer_quartic_params(const RosenhainModuli& lam);

// xi0 (16 xi0^2 - 4 xi1^2 - 4 xi2^2 - 4 xi3^2 + xi4^2) + 4 xi1 xi2 xi3
Rational nodal_quartic_residual(const std::array<Rational, 5>& xi);
// Same with the cubed xi3 term exactly as typeset in the source; kept for the discrepancy report.
Rational nodal_quartic_residual_as_printed(const std::array<Rational, 5>& xi);

// ((1 - k)/(1 + k))^2 with k = branch * sqrt(lambda).
QuadExt elliptic_two_isogeny_modulus(const Rational& lambda, int branch = 1);

struct TwoIsogenyLocus {
  Rational residual;
  std::optional<Rational> lambda_sq;  // absent when some l_i = 1
};
TwoIsogenyLocus two_isogeny_locus_residual(const Rational& l1, const Rational& l2);

Rational j_invariant(const Rational& lambda);
Rational x0_2_residual(const Rational& j1, const Rational& j2);
// Variant using the (j1 + j2) coefficient 2^7 3^7 5^5 as typeset; it does not vanish on X0(2).
Rational x0_2_residual_as_printed(const Rational& j1, const Rational& j2);
// (j1, j2) = ((h + 256)^3 / h^2, (h + 16)^3 / h)
std::array<Rational, 2> x0_2_parametrization(const Rational& h);

// Level-two moduli of the pencil degenerating at eps -> 0.
std::array<Rational, 3> degeneration_moduli(const Rational& k1, const Rational& k2, const Rational& eps);

}  // namespace ksand
