#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "ksand/arith/prime_field.hpp"
#include "ksand/poly/polynomial.hpp"

namespace ksand {

// y^2 = x^3 + a2(u) x^2 + a4(u) x + a6(u)
struct WeierstrassSurface {
  std::string catalog_id;
  std::string base_variable = "u";
  UniPoly a2, a4, a6;
  // How the stored polynomial model relates to the displayed one, if it differs.
  std::string rescaling;

  // Largest power of every coefficient denominator is cleared by the caller;
  // this checks deg a2 <= 4, deg a4 <= 8, deg a6 <= 12.
  bool within_k3_bounds() const;
};

// y^2 = f(x, w), w being the base coordinate.
struct AffineDoubleCover {
  std::string catalog_id;
  std::string x_variable = "x";
  std::string base_variable = "w";
  BiPoly f;
};

// xi0 (X0^4 + ... + X3^4) + xi4 X0X1X2X3 + xi1 (X0^2X1^2 + X2^2X3^2) + xi2 (...) + xi3 (...)
struct QuarticSurface {
  std::string catalog_id;
  std::array<Rational, 5> xi;
};

// x1 x2 x3 (x1 + x2 + x3 + 1) + mu/256 = 0 with mu = 1/lambda^4.
struct MirrorCubic {
  std::string catalog_id;
  Rational lambda;
  Rational mu;
};

// Constant-coefficient Weierstrass curve y^2 = x^3 + a2 x^2 + a4 x + a6.
struct EllipticCurveModel {
  std::string catalog_id;
  Rational a2, a4, a6;
};

using SurfaceModel = std::variant<WeierstrassSurface, AffineDoubleCover, QuarticSurface, MirrorCubic, EllipticCurveModel>;

template <class Field>
struct FiberedPoint {
  typename Field::Elem base, x, y;
};

template <class Field>
typename Field::Elem weierstrass_rhs(const WeierstrassSurface& s, const Field& F, const typename Field::Elem& base,
                                     const typename Field::Elem& x) {
  auto a2 = eval_in(s.a2, F, base);
  auto a4 = eval_in(s.a4, F, base);
  auto a6 = eval_in(s.a6, F, base);
  return ((x + a2) * x + a4) * x + a6;
}

template <class Field>
typename Field::Elem surface_residual(const WeierstrassSurface& s, const Field& F, const FiberedPoint<Field>& P) {
  return P.y * P.y - weierstrass_rhs(s, F, P.base, P.x);
}

template <class Field>
typename Field::Elem surface_residual(const AffineDoubleCover& s, const Field& F, const FiberedPoint<Field>& P) {
  return P.y * P.y - eval_in(s.f, F, P.x, P.base);
}

template <class Field>
bool is_on_surface(const WeierstrassSurface& s, const Field& F, const FiberedPoint<Field>& P) {
  return is_zero(surface_residual(s, F, P));
}

template <class Field>
bool is_on_surface(const AffineDoubleCover& s, const Field& F, const FiberedPoint<Field>& P) {
  return is_zero(surface_residual(s, F, P));
}

template <class Field>
bool is_on_quartic(const QuarticSurface& s, const Field& F, const std::array<typename Field::Elem, 4>& X) {
  auto sq = [](const auto& v) { return v * v; };
  auto q = [&](int i) { return sq(X[i]); };
  auto r = F.from_rational(s.xi[0]) * (sq(q(0)) + sq(q(1)) + sq(q(2)) + sq(q(3))) +
           F.from_rational(s.xi[4]) * X[0] * X[1] * X[2] * X[3] +
           F.from_rational(s.xi[1]) * (q(0) * q(1) + q(2) * q(3)) +
           F.from_rational(s.xi[2]) * (q(0) * q(2) + q(1) * q(3)) +
           F.from_rational(s.xi[3]) * (q(0) * q(3) + q(1) * q(2));
  return is_zero(r);
}

template <class Field>
typename Field::Elem mirror_cubic_residual(const MirrorCubic& m, const Field& F, const typename Field::Elem& x1,
                                           const typename Field::Elem& x2, const typename Field::Elem& x3) {
  return x1 * x2 * x3 * (x1 + x2 + x3 + F.one()) + F.from_rational(m.mu / Rational(256));
}

template <class Field>
bool is_on_curve(const EllipticCurveModel& e, const Field& F, const typename Field::Elem& x,
                 const typename Field::Elem& y) {
  auto rhs = ((x + F.from_rational(e.a2)) * x + F.from_rational(e.a4)) * x + F.from_rational(e.a6);
  return is_zero(y * y - rhs);
}

}  // namespace ksand
