#include "ksand/counting/counting.hpp"

#include <algorithm>
#include <thread>

namespace ksand {

namespace {

std::vector<std::uint64_t> reduce_coeffs(const UniPoly& p, const PrimeFieldCtx& ctx) {
  std::vector<std::uint64_t> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(ctx.reduce(c));
  return out;
}

std::uint64_t horner(const std::vector<std::uint64_t>& c, std::uint64_t x, const PrimeFieldCtx& ctx) {
  std::uint64_t acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = ctx.add(ctx.mul(acc, x), *it);
  return acc;
}

// Coefficients of f in x, each reduced as a polynomial in w.
std::vector<std::vector<std::uint64_t>> reduce_cover(const AffineDoubleCover& cover, const PrimeFieldCtx& ctx) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& c : cover.f.coeffs()) rows.push_back(reduce_coeffs(c, ctx));
  return rows;
}

template <class RowFn>
long long sum_rows(std::uint64_t p, int threads, RowFn row) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(p)));
  if (threads == 1) {
    long long s = 0;
    for (std::uint64_t w = 0; w < p; ++w) s += row(w);
    return s;
  }
  std::vector<long long> partial(threads, 0);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      long long s = 0;
      for (std::uint64_t w = t; w < p; w += threads) s += row(w);
      partial[t] = s;
    });
  }
  for (auto& th : pool) th.join();
  long long s = 0;
  for (auto v : partial) s += v;
  return s;
}

}  // namespace

std::vector<std::int8_t> quadratic_character_table(const PrimeFieldCtx& ctx) {
  const std::uint64_t p = ctx.p();
  std::vector<std::int8_t> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t x = 1; x <= p / 2; ++x) chi[ctx.mul(x, x)] = 1;
  return chi;
}

long long character_sum(const AffineDoubleCover& cover, const PrimeFieldCtx& ctx, int threads) {
  const std::uint64_t p = ctx.p();
  auto rows = reduce_cover(cover, ctx);
  auto chi = quadratic_character_table(ctx);
  return sum_rows(p, threads, [&](std::uint64_t w) {
    std::vector<std::uint64_t> cx(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) cx[i] = horner(rows[i], w, ctx);
    long long s = 0;
    for (std::uint64_t x = 0; x < p; ++x) s += chi[horner(cx, x, ctx)];
    return s;
  });
}

std::uint64_t character_sum_count(const AffineDoubleCover& cover, const PrimeFieldCtx& ctx, int threads) {
  long long s = character_sum(cover, ctx, threads) % static_cast<long long>(ctx.p());
  if (s < 0) s += static_cast<long long>(ctx.p());
  return static_cast<std::uint64_t>(s);
}

AffineDoubleCover weierstrass_as_cover(const WeierstrassSurface& s) {
  AffineDoubleCover c;
  c.catalog_id = s.catalog_id;
  c.x_variable = "x";
  c.base_variable = s.base_variable;
  c.f = BiPoly(std::vector<UniPoly>{s.a6, s.a4, s.a2, UniPoly(Rational(1))});
  return c;
}

AffineCount affine_point_count(const AffineDoubleCover& cover, const PrimeFieldCtx& ctx) {
  const std::uint64_t p = ctx.p();
  auto rows = reduce_cover(cover, ctx);
  AffineCount out;
  out.p = p;
  for (std::uint64_t w = 0; w < p; ++w) {
    std::vector<std::uint64_t> cx(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) cx[i] = horner(rows[i], w, ctx);
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t f = horner(cx, x, ctx);
      if (f == 0) ++out.zeros;
      out.chi_sum += legendre_symbol(f, ctx);
      for (std::uint64_t y = 0; y < p; ++y)
        if (ctx.mul(y, y) == f) ++out.total;
    }
  }
  return out;
}

TwistFactor twist_factor(const Triple& L) {
  QuadExt d23 = L[1] - L[2];
  QuadExt den = d23 * d23 * (L[0] * L[0] - QuadExt(4));
  if (d23.is_zero()) throw DegenerateInput("vanishing factor in nu: L2 - L3");
  if (den.is_zero()) throw DegenerateInput("vanishing factor in nu: L1^2 - 4");
  TwistFactor t;
  t.nu = QuadExt(16) * (L[0] - L[2]) * (L[0] - L[1]) / den;
  t.degenerate = t.nu.is_zero();
  return t;
}

}  // namespace ksand
