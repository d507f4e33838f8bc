#include "ksand/counting/jacobian.hpp"

#include <cmath>
#include <stdexcept>

namespace ksand {

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, const PrimeFieldCtx& ctx) {
  trim(a);
  const std::uint64_t inv_lc = ctx.inv(b.back());
  while (a.size() >= b.size()) {
    const std::uint64_t q = ctx.mul(a.back(), inv_lc);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ctx.sub(a[shift + i], ctx.mul(q, b[i]));
    trim(a);
  }
  return a;
}

// Elements a + b s of F_p[s]/(s^2 - n).
struct Fp2 {
  std::uint64_t a, b;
};

}  // namespace

int gcd_with_derivative_degree(const std::vector<std::uint64_t>& coeffs, const PrimeFieldCtx& ctx) {
  Poly f;
  for (auto c : coeffs) f.push_back(c % ctx.p());
  trim(f);
  if (f.empty()) throw std::invalid_argument("zero polynomial");
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(ctx.mul(i % ctx.p(), f[i]));
  trim(d);
  if (d.empty()) return static_cast<int>(f.size()) - 1;
  Poly a = f, b = d;
  while (!b.empty()) {
    Poly r = poly_mod(a, b, ctx);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

JacobianReport jacobian_order(const std::vector<std::uint64_t>& coeffs, const PrimeFieldCtx& ctx) {
  const std::uint64_t p = ctx.p();
  JacobianReport rep;
  rep.p = p;
  for (auto c : coeffs) rep.coeffs.push_back(c % p);
  trim(rep.coeffs);
  const int deg = static_cast<int>(rep.coeffs.size()) - 1;
  if (deg != 5 && deg != 6) throw std::invalid_argument("genus-two curve needs degree 5 or 6 mod p");
  if (gcd_with_derivative_degree(rep.coeffs, ctx) != 0) throw std::invalid_argument("polynomial is not squarefree mod p");
  const auto& f = rep.coeffs;
  const int chi_lc = legendre_symbol(f.back(), ctx);

  long long n1 = deg == 5 ? 1 : 1 + chi_lc;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) v = ctx.add(ctx.mul(v, x), *it);
    n1 += 1 + legendre_symbol(v, ctx);
  }

  const std::uint64_t n = ctx.smallest_nonresidue();
  auto mul = [&](Fp2 u, Fp2 v) {
    return Fp2{ctx.add(ctx.mul(u.a, v.a), ctx.mul(n, ctx.mul(u.b, v.b))),
               ctx.add(ctx.mul(u.a, v.b), ctx.mul(u.b, v.a))};
  };
  // Every element of F_p is a square in F_{p^2}, so degree 6 always has two points at infinity.
  long long n2 = deg == 5 ? 1 : 2;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b) {
      Fp2 x{a, b}, v{0, 0};
      for (auto it = f.rbegin(); it != f.rend(); ++it) {
        v = mul(v, x);
        v.a = ctx.add(v.a, *it);
      }
      const std::uint64_t norm = ctx.sub(ctx.mul(v.a, v.a), ctx.mul(n, ctx.mul(v.b, v.b)));
      n2 += 1 + legendre_symbol(norm, ctx);
    }

  rep.n1 = n1;
  rep.n2 = n2;
  const long long s = n1 * n1 + n2;
  rep.parity_ok = s % 2 == 0;
  rep.jac_order = s / 2 - static_cast<long long>(p);
  const double r = std::sqrt(static_cast<double>(p));
  const double lo = std::pow(r - 1, 4), hi = std::pow(r + 1, 4);
  rep.weil_ok = rep.jac_order >= std::ceil(lo - 1e-9) && rep.jac_order <= std::floor(hi + 1e-9);
  return rep;
}

}  // namespace ksand
