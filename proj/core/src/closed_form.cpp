#include "ksand/counting/closed_form.hpp"

#include <array>
#include <stdexcept>

namespace ksand {

std::string kernel_name(Kernel k) {
  switch (k) {
    case Kernel::Naive: return "naive";
    case Kernel::Convolution: return "convolution";
    case Kernel::Ntt: return "ntt";
  }
  return "?";
}

Kernel parse_kernel(const std::string& name) {
  if (name == "naive") return Kernel::Naive;
  if (name == "convolution" || name == "conv") return Kernel::Convolution;
  if (name == "ntt") return Kernel::Ntt;
  throw std::invalid_argument("unknown kernel: " + name);
}

namespace {

std::vector<std::uint64_t> powers(std::uint64_t a, std::uint64_t n, const PrimeFieldCtx& ctx) {
  std::vector<std::uint64_t> out(n + 1);
  out[0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i) out[i] = ctx.mul(out[i - 1], a % ctx.p());
  return out;
}

std::uint64_t finish(std::uint64_t total, std::uint64_t m, const PrimeFieldCtx& ctx) {
  std::uint64_t signed_total = (m % 2 == 0) ? total : ctx.neg(total);
  return ctx.add(1, signed_total);
}

std::uint64_t naive(std::uint64_t a, std::uint64_t b, std::uint64_t c, const PrimeFieldCtx& ctx) {
  const std::uint64_t p = ctx.p();
  const std::uint64_t m = (p - 1) / 2;
  const auto C = binomials_mod_p(m, ctx);
  const auto pa = powers(a, m, ctx), pb = powers(b, m, ctx), pc = powers(c, m, ctx);
  std::uint64_t total = 0;
  std::uint64_t two_l = 1;
  for (std::uint64_t l = 0; l <= m; ++l, two_l = ctx.mul(two_l, 2)) {
    const std::uint64_t rest = p - 1 - l;
    std::uint64_t S = 0;
    for (std::uint64_t s = 0; s <= m; ++s) {
      if (s > rest) break;
      std::uint64_t t = rest - s;
      if (t > m) continue;
      std::uint64_t term = ctx.mul(C[s], C[t]);
      S = (t % 2 == 0) ? ctx.add(S, term) : ctx.sub(S, term);
    }
    std::uint64_t T = 0;
    for (std::uint64_t i = 0; i <= m && i <= rest; ++i) {
      std::uint64_t ui = ctx.mul(C[i], pa[i]);
      for (std::uint64_t j = 0; j <= m && i + j <= rest; ++j) {
        std::uint64_t k = rest - i - j;
        if (k > m) continue;
        T = ctx.add(T, ctx.mul(ui, ctx.mul(ctx.mul(C[j], pb[j]), ctx.mul(C[k], pc[k]))));
      }
    }
    total = ctx.add(total, ctx.mul(ctx.mul(two_l, C[l]), ctx.mul(S, T)));
  }
  return finish(total, m, ctx);
}

template <class Conv>
std::uint64_t via_convolution(std::uint64_t a, std::uint64_t b, std::uint64_t c, const PrimeFieldCtx& ctx,
                              Conv conv) {
  const std::uint64_t p = ctx.p();
  const std::uint64_t m = (p - 1) / 2;
  const auto C = binomials_mod_p(m, ctx);
  const auto pa = powers(a, m, ctx), pb = powers(b, m, ctx), pc = powers(c, m, ctx);
  std::vector<std::uint64_t> u(m + 1), v(m + 1), w(m + 1), alt(m + 1);
  for (std::uint64_t i = 0; i <= m; ++i) {
    u[i] = ctx.mul(C[i], pa[i]);
    v[i] = ctx.mul(C[i], pb[i]);
    w[i] = ctx.mul(C[i], pc[i]);
    alt[i] = (i % 2 == 0) ? C[i] : ctx.neg(C[i]);
  }
  const auto S = conv(C, alt);            // index s + t
  const auto T = conv(conv(u, v), w);     // index i + j + k
  std::uint64_t total = 0;
  std::uint64_t two_l = 1;
  for (std::uint64_t l = 0; l <= m; ++l, two_l = ctx.mul(two_l, 2)) {
    const std::uint64_t idx = p - 1 - l;
    std::uint64_t s = idx < S.size() ? S[idx] : 0;
    std::uint64_t t = idx < T.size() ? T[idx] : 0;
    total = ctx.add(total, ctx.mul(ctx.mul(two_l, C[l]), ctx.mul(s, t)));
  }
  return finish(total, m, ctx);
}

// Number-theoretic transform over a fixed NTT-friendly prime.
struct NttPrime {
  std::uint32_t mod;
  std::uint32_t root;
};
constexpr std::array<NttPrime, 3> kNttPrimes = {{{998244353u, 3u}, {167772161u, 3u}, {469762049u, 3u}}};

std::uint64_t pw(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

void ntt(std::vector<std::uint64_t>& a, bool invert, const NttPrime& P) {
  const std::uint64_t mod = P.mod;
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t w = pw(P.root, (mod - 1) / len, mod);
    if (invert) w = pw(w, mod - 2, mod);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t wn = 1;
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::uint64_t x = a[i + j];
        std::uint64_t y = a[i + j + len / 2] * wn % mod;
        a[i + j] = x + y < mod ? x + y : x + y - mod;
        a[i + j + len / 2] = x >= y ? x - y : x + mod - y;
        wn = wn * w % mod;
      }
    }
  }
  if (invert) {
    std::uint64_t inv_n = pw(n, mod - 2, mod);
    for (auto& x : a) x = x * inv_n % mod;
  }
}

std::vector<std::uint64_t> conv_under(const std::vector<std::uint64_t>& u, const std::vector<std::uint64_t>& v,
                                      const NttPrime& P) {
  std::size_t need = u.size() + v.size() - 1;
  std::size_t n = 1;
  while (n < need) n <<= 1;
  std::vector<std::uint64_t> fa(n, 0), fb(n, 0);
  for (std::size_t i = 0; i < u.size(); ++i) fa[i] = u[i] % P.mod;
  for (std::size_t i = 0; i < v.size(); ++i) fb[i] = v[i] % P.mod;
  ntt(fa, false, P);
  ntt(fb, false, P);
  for (std::size_t i = 0; i < n; ++i) fa[i] = fa[i] * fb[i] % P.mod;
  ntt(fa, true, P);
  fa.resize(need);
  return fa;
}

}  // namespace

std::vector<std::uint64_t> convolve_mod_p(const std::vector<std::uint64_t>& u, const std::vector<std::uint64_t>& v,
                                          const PrimeFieldCtx& ctx) {
  if (u.empty() || v.empty()) return {};
  std::vector<std::uint64_t> out(u.size() + v.size() - 1, 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) out[i + j] = ctx.add(out[i + j], ctx.mul(u[i], v[j]));
  }
  return out;
}

std::vector<std::uint64_t> convolve_ntt_mod_p(const std::vector<std::uint64_t>& u,
                                              const std::vector<std::uint64_t>& v, const PrimeFieldCtx& ctx) {
  if (u.empty() || v.empty()) return {};
  if (ctx.p() >= (1u << 20)) throw std::invalid_argument("NTT kernel supports p < 2^20");
  // Integer entries are at most min(|u|, |v|) * (p - 1)^2 < 2^60, well inside
  // the product of the three moduli (about 2^88).
  std::array<std::vector<std::uint64_t>, 3> r;
  for (int k = 0; k < 3; ++k) r[k] = conv_under(u, v, kNttPrimes[k]);
  const unsigned __int128 m0 = kNttPrimes[0].mod, m1 = kNttPrimes[1].mod, m2 = kNttPrimes[2].mod;
  const std::uint64_t inv_m0_mod_m1 = pw(kNttPrimes[0].mod, kNttPrimes[1].mod - 2, kNttPrimes[1].mod);
  const std::uint64_t m0m1_mod_m2 = static_cast<std::uint64_t>(m0 * m1 % m2);
  const std::uint64_t inv_m0m1_mod_m2 = pw(m0m1_mod_m2, kNttPrimes[2].mod - 2, kNttPrimes[2].mod);
  std::vector<std::uint64_t> out(r[0].size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    // Garner reconstruction of the exact integer value x < m0 m1 m2.
    std::uint64_t x0 = r[0][i];
    std::uint64_t t1 = (r[1][i] + kNttPrimes[1].mod - x0 % kNttPrimes[1].mod) % kNttPrimes[1].mod;
    std::uint64_t x1 = t1 * inv_m0_mod_m1 % kNttPrimes[1].mod;
    unsigned __int128 partial = x0 + static_cast<unsigned __int128>(x1) * m0;
    std::uint64_t partial_mod_m2 = static_cast<std::uint64_t>(partial % m2);
    std::uint64_t t2 = (r[2][i] + kNttPrimes[2].mod - partial_mod_m2) % kNttPrimes[2].mod;
    std::uint64_t x2 = t2 * inv_m0m1_mod_m2 % kNttPrimes[2].mod;
    unsigned __int128 value = partial + static_cast<unsigned __int128>(x2) * m0 * m1;
    out[i] = static_cast<std::uint64_t>(value % ctx.p());
  }
  return out;
}

std::uint64_t closed_form_count(std::uint64_t a, std::uint64_t b, std::uint64_t c, const PrimeFieldCtx& ctx,
                                Kernel kernel) {
  a %= ctx.p();
  b %= ctx.p();
  c %= ctx.p();
  switch (kernel) {
    case Kernel::Naive: return naive(a, b, c, ctx);
    case Kernel::Convolution:
      return via_convolution(a, b, c, ctx, [&](const auto& u, const auto& v) { return convolve_mod_p(u, v, ctx); });
    case Kernel::Ntt:
      return via_convolution(a, b, c, ctx, [&](const auto& u, const auto& v) { return convolve_ntt_mod_p(u, v, ctx); });
  }
  throw std::logic_error("unhandled kernel");
}

}  // namespace ksand
