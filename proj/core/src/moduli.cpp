#include "ksand/moduli.hpp"

namespace ksand {

namespace {

void require_nonzero(const QuadExt& v, const std::string& what) {
  if (v.is_zero()) throw DegenerateInput("vanishing factor: " + what);
}

}  // namespace

void validate_rosenhain(const RosenhainModuli& lam) {
  const Rational* v[3] = {&lam.l1, &lam.l2, &lam.l3};
  for (int i = 0; i < 3; ++i) {
    if (v[i]->is_zero() || *v[i] == Rational(1))
      throw DegenerateInput("Rosenhain root l" + std::to_string(i + 1) + " must avoid 0 and 1");
    for (int j = i + 1; j < 3; ++j)
      if (*v[i] == *v[j])
        throw DegenerateInput("Rosenhain roots l" + std::to_string(i + 1) + " and l" + std::to_string(j + 1) +
                              " coincide");
  }
}

bool LevelTwoModuli::is_rational() const {
  return L[0].is_rational() && L[1].is_rational() && L[2].is_rational();
}

std::array<Rational, 3> LevelTwoModuli::rational() const {
  if (!is_rational()) throw std::domain_error("level-two moduli are not rational");
  return {L[0].a(), L[1].a(), L[2].a()};
}

Rational KummerQuarticParams::identity_residual() const {
  return D * D - (A * A + B * B + C * C + A * B * C - Rational(4));
}

LevelTwoModuli level_two_from_rosenhain(const RosenhainModuli& lam, int sign) {
  validate_rosenhain(lam);
  Rational prod = lam.l1 * lam.l2 * lam.l3;
  QuadExt l = QuadExt::sqrt_of(prod, sign);
  LevelTwoModuli out;
  out.l = l;
  out.L[0] = QuadExt(lam.l1 + lam.l2 * lam.l3) / l;
  out.L[1] = QuadExt(lam.l2 + lam.l1 * lam.l3) / l;
  out.L[2] = QuadExt(lam.l3 + lam.l1 * lam.l2) / l;
  return out;
}

Triple richelot_transform(const Triple& L) {
  const QuadExt& a = L[0];
  const QuadExt& b = L[1];
  const QuadExt& c = L[2];
  QuadExt d23 = b - c;
  require_nonzero(d23, "L2 - L3");
  require_nonzero(a + QuadExt(2), "L1 + 2");
  require_nonzero(a - QuadExt(2), "L1 - 2");
  QuadExt p1 = QuadExt(2) * (QuadExt(2) * a - b - c) / d23;
  QuadExt num = QuadExt(4) * (a - b) * (a - c);
  QuadExt p2 = p1 - num / ((a + QuadExt(2)) * d23);
  QuadExt p3 = p1 - num / ((a - QuadExt(2)) * d23);
  return {p1, p2, p3};
}

LevelTwoModuli richelot_transform(const LevelTwoModuli& L) {
  return LevelTwoModuli{richelot_transform(L.L), std::nullopt};
}

KummerQuarticParams kummer_quartic_params(const RosenhainModuli& lam) {
  const Rational& l1 = lam.l1;
  const Rational& l2 = lam.l2;
  const Rational& l3 = lam.l3;
  if (l1 == Rational(1)) throw DegenerateInput("vanishing factor: l1 - 1");
  if (l2 == l3) throw DegenerateInput("vanishing factor: l2 - l3");
  KummerQuarticParams k;
  k.A = Rational(2) * (l1 + 1) / (l1 - 1);
  k.B = Rational(2) * (l1 * l2 + l1 * l3 - Rational(2) * l2 * l3 - Rational(2) * l1 + l2 + l3) /
        ((l2 - l3) * (l1 - 1));
  k.C = Rational(2) * (l3 + l2) / (l3 - l2);
  k.D = Rational(4) * (l1 - l2 * l3) / ((l2 - l3) * (l1 - 1));
  return k;
}

Rational nodal_quartic_residual(const std::array<Rational, 5>& xi) {
  const auto& [x0, x1, x2, x3, x4] = xi;
  return x0 * (Rational(16) * x0 * x0 - Rational(4) * x1 * x1 - Rational(4) * x2 * x2 - Rational(4) * x3 * x3 +
               x4 * x4) +
         Rational(4) * x1 * x2 * x3;
}

Rational nodal_quartic_residual_as_printed(const std::array<Rational, 5>& xi) {
  const auto& [x0, x1, x2, x3, x4] = xi;
  return x0 * (Rational(16) * x0 * x0 - Rational(4) * x1 * x1 - Rational(4) * x2 * x2 -
               Rational(4) * x3 * x3 * x3 + x4 * x4) +
         Rational(4) * x1 * x2 * x3;
}

QuadExt elliptic_two_isogeny_modulus(const Rational& lambda, int branch) {
  if (lambda.is_zero() || lambda == Rational(1)) throw DegenerateInput("elliptic modulus must avoid 0 and 1");
  QuadExt k = QuadExt::sqrt_of(lambda, branch);
  QuadExt den = QuadExt(1) + k;
  require_nonzero(den, "1 + k");
  QuadExt r = (QuadExt(1) - k) / den;
  return r * r;
}

TwoIsogenyLocus two_isogeny_locus_residual(const Rational& l1, const Rational& l2) {
  for (const Rational* v : {&l1, &l2})
    if (v->is_zero() || *v == Rational(1)) throw DegenerateInput("elliptic modulus must avoid 0 and 1");
  Rational s = l1 + l2;
  Rational p = l1 * l2;
  TwoIsogenyLocus out;
  out.residual = p * p - Rational(2) * p * s + l1 * l1 + l2 * l2 - Rational(12) * p - Rational(2) * s + 1;
  out.lambda_sq = -(l1 + 1) * (l2 + 1) / (Rational(2) * (l1 - 1) * (l2 - 1));
  return out;
}

Rational j_invariant(const Rational& lambda) {
  if (lambda.is_zero() || lambda == Rational(1)) throw DegenerateInput("j-invariant needs lambda outside {0, 1}");
  Rational q = lambda * lambda - lambda + 1;
  return Rational(256) * q.pow(3) / (lambda * lambda * (lambda - 1) * (lambda - 1));
}

namespace {

Rational x0_2_generic(const Rational& j1, const Rational& j2, const Rational& linear) {
  Rational s = j1 + j2;
  Rational p = j1 * j2;
  return -p * p + j1.pow(3) + j2.pow(3) + Rational(1488) * p * s - Rational(162000) * (j1 * j1 + j2 * j2) +
         Rational(40773375) * p + linear * s - Rational(mpz_class("157464000000000"));
}

}  // namespace

Rational x0_2_residual(const Rational& j1, const Rational& j2) {
  return x0_2_generic(j1, j2, Rational(mpz_class("8748000000")));
}

Rational x0_2_residual_as_printed(const Rational& j1, const Rational& j2) {
  return x0_2_generic(j1, j2, Rational(mpz_class("874800000")));
}

std::array<Rational, 2> x0_2_parametrization(const Rational& h) {
  if (h.is_zero()) throw DegenerateInput("X0(2) parameter h must be nonzero");
  return {(h + 256).pow(3) / (h * h), (h + 16).pow(3) / h};
}

std::array<Rational, 3> degeneration_moduli(const Rational& k1, const Rational& k2, const Rational& eps) {
  if (k1.is_zero() || k2.is_zero() || eps.is_zero()) throw DegenerateInput("degeneration inputs must be nonzero");
  Rational x1 = k2 * eps * eps / k1;
  Rational x2 = k1 / k2;
  Rational x3 = k1 * k2;
  return {x1 + Rational(1) / x1, x2 + Rational(1) / x2, x3 + Rational(1) / x3};
}

}  // namespace ksand
