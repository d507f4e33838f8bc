#pragma once

#include <cstdint>
#include <random>

#include "ksand/surfaces/models.hpp"

namespace ksand {

using Rng = std::mt19937_64;

// Uniform integer in [0, n) by rejection; std distributions differ across
// standard libraries, this does not.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Draw base and x uniformly until the right-hand side is a square; y is the
// smaller square root. Throws BadReduction if p divides a coefficient
// denominator, SamplingError after max_draws failures.
FiberedPoint<FpField> sample_point(const WeierstrassSurface& s, const PrimeFieldCtx& ctx, Rng& rng,
                                   int max_draws = 10000);
FiberedPoint<FpField> sample_point(const AffineDoubleCover& s, const PrimeFieldCtx& ctx, Rng& rng,
                                   int max_draws = 10000);

}  // namespace ksand
