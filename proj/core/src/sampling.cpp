#include "ksand/surfaces/sampling.hpp"

namespace ksand {

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below(0)");
  const std::uint64_t limit = Rng::max() - Rng::max() % n;
  for (;;) {
    std::uint64_t v = rng();
    if (v < limit) return v % n;
  }
}

namespace {

template <class Model>
FiberedPoint<FpField> sample_impl(const Model& s, const PrimeFieldCtx& ctx, Rng& rng, int max_draws) {
  FpField F(ctx);
  // Reduce every coefficient once so a bad prime fails before sampling.
  FiberedPoint<FpField> probe{F.zero(), F.zero(), F.zero()};
  (void)surface_residual(s, F, probe);
  for (int i = 0; i < max_draws; ++i) {
    Fp base = F.from_u64(uniform_below(rng, ctx.p()));
    Fp x = F.from_u64(uniform_below(rng, ctx.p()));
    FiberedPoint<FpField> P{base, x, F.zero()};
    Fp rhs = -surface_residual(s, F, P);
    auto r = sqrt_mod_p(rhs.value(), ctx);
    if (!r) continue;
    P.y = Fp(*r, &ctx);
    return P;
  }
  throw SamplingError(s.catalog_id + ": no point found after " + std::to_string(max_draws) + " draws");
}

}  // namespace

FiberedPoint<FpField> sample_point(const WeierstrassSurface& s, const PrimeFieldCtx& ctx, Rng& rng, int max_draws) {
  return sample_impl(s, ctx, rng, max_draws);
}

FiberedPoint<FpField> sample_point(const AffineDoubleCover& s, const PrimeFieldCtx& ctx, Rng& rng, int max_draws) {
  return sample_impl(s, ctx, rng, max_draws);
}

}  // namespace ksand
