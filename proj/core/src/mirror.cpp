#include "ksand/surfaces/mirror.hpp"

#include "ksand/surfaces/catalog.hpp"
#include "ksand/surfaces/sampling.hpp"

namespace ksand {

UniPoly mirror_section_residual(const Rational& lambda, bool as_printed) {
  WeierstrassSurface s = catalog_weierstrass("MIRROR_G2G3", {lambda});
  UniPoly x = as_printed ? mirror_torsion_section_x_as_printed(lambda) : mirror_torsion_section_x(lambda);
  return x * x * x + s.a2 * x * x + s.a4 * x + s.a6;
}

SubstitutionReport narumiya_shiga_substitution_check(const Rational& lambda, const PrimeFieldCtx& ctx, int trials,
                                                     std::uint64_t seed) {
  if (ctx.p() % 4 != 1) throw std::invalid_argument("the substitution needs p = 1 mod 4 for sqrt(-1)");
  FpField F(ctx);
  Fp lam = F.from_rational(lambda);
  if (lam.is_zero()) throw std::invalid_argument("lambda vanishes mod p");
  WeierstrassSurface s = catalog_weierstrass("MIRROR_G2G3", {lambda});
  MirrorCubic target{"MIRROR_CUBIC", lambda, Rational(1) / lambda.pow(4)};
  Fp i(*sqrt_mod_p(ctx.p() - 1, ctx), &ctx);
  auto c = [&](long v) { return F.from_rational(Rational(v)); };

  SubstitutionReport rep;
  rep.p = ctx.p();
  rep.lambda = lambda;
  rep.trials = trials;
  Rng rng(seed);
  Fp l2 = lam * lam;
  for (int t = 0; t < trials; ++t) {
    auto P = sample_point(s, ctx, rng);
    const Fp& u = P.base;
    const Fp& X = P.x;
    Fp Y = c(2) * P.y;  // back to the 4X^3 normalization
    Fp A1 = c(4) * u * u * l2 + c(3) * X * l2 + u * u * u + u;
    Fp A2 = c(4) * u * u * l2 + c(3) * X * l2 + u * u * u - c(2) * u;
    Fp Bd = c(16) * u * u * u * l2 - c(3) * i * Y * l2 + c(12) * X * u * l2 + c(4) * u * u * u * u + c(4) * u * u;
    if (u.is_zero() || A2.is_zero() || Bd.is_zero()) {
      ++rep.excluded;
      continue;
    }
    Fp x1 = -(A1 * A2) / (c(6) * l2 * u * Bd);
    Fp x2 = -Bd / (c(8) * u * A2);
    Fp x3 = u * u * A2 / (c(2) * l2 * Bd);
    if (mirror_cubic_residual(target, F, x1, x2, x3).is_zero())
      ++rep.passes;
    else
      ++rep.failures;
  }
  return rep;
}

}  // namespace ksand
