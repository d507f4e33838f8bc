#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksand/moduli.hpp"
#include "ksand/surfaces/models.hpp"

namespace ksand {

// chi(v) for every residue v, with chi(0) = 0.
std::vector<std::int8_t> quadratic_character_table(const PrimeFieldCtx& ctx);

// Signed integer sum of chi(f(x, w)) over F_p^2. Rows (w) are split across
// `threads` workers; the result does not depend on the thread count.
long long character_sum(const AffineDoubleCover& cover, const PrimeFieldCtx& ctx, int threads = 1);

// The same sum reduced mod p: sum of f^((p-1)/2).
std::uint64_t character_sum_count(const AffineDoubleCover& cover, const PrimeFieldCtx& ctx, int threads = 1);

// Affine part of a Weierstrass fibration as the double cover y^2 = rhs(x, base).
AffineDoubleCover weierstrass_as_cover(const WeierstrassSurface& s);

struct AffineCount {
  std::uint64_t p = 0;
  long long total = 0;       // #{(x, w, y) : y^2 = f(x, w)}
  long long zeros = 0;       // #{(x, w) : f(x, w) = 0}
  long long chi_sum = 0;     // sum of chi(f)
  // total = p^2 + chi_sum, since each (x, w) contributes 1 + chi(f).
  bool consistent() const { return total == static_cast<long long>(p * p) + chi_sum; }
};

// Literal affine point count by enumerating (x, w, y); O(p^3) and meant for small p.
AffineCount affine_point_count(const AffineDoubleCover& cover, const PrimeFieldCtx& ctx);

struct TwistFactor {
  QuadExt nu;
  bool degenerate = false;  // nu = 0
};

// 16 (L1 - L3)(L1 - L2) / ((L2 - L3)^2 (L1^2 - 4)); throws DegenerateInput on a vanishing denominator.
TwistFactor twist_factor(const Triple& L);

}  // namespace ksand
