#include "ksand/arith/prime_field.hpp"

#include <string>

namespace ksand {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeFieldCtx::PrimeFieldCtx(std::uint64_t p) : p_(p) {
  if (p < 3 || !is_prime_u64(p)) throw std::invalid_argument("not an odd prime: " + std::to_string(p));
  if (p > kMaxTabulated) return;
  factorials_.resize(p);
  inverse_factorials_.resize(p);
  factorials_[0] = 1;
  for (std::uint64_t k = 1; k < p; ++k) factorials_[k] = mul(factorials_[k - 1], k);
  inverse_factorials_[p - 1] = inv(factorials_[p - 1]);
  for (std::uint64_t k = p - 1; k > 0; --k) inverse_factorials_[k - 1] = mul(inverse_factorials_[k], k);
}

const std::vector<std::uint64_t>& PrimeFieldCtx::factorials() const {
  if (!has_tables()) throw std::logic_error("factorial tables not built for p = " + std::to_string(p_));
  return factorials_;
}

const std::vector<std::uint64_t>& PrimeFieldCtx::inverse_factorials() const {
  if (!has_tables()) throw std::logic_error("factorial tables not built for p = " + std::to_string(p_));
  return inverse_factorials_;
}

std::uint64_t PrimeFieldCtx::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero mod " + std::to_string(p_));
  return powmod(a, p_ - 2, p_);
}

std::uint64_t PrimeFieldCtx::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeFieldCtx::reduce(const Rational& q) const {
  static_assert(sizeof(unsigned long) == 8, "mpz_fdiv_ui needs 64-bit unsigned long");
  std::uint64_t du = mpz_fdiv_ui(q.raw().get_den_mpz_t(), p_);
  if (du == 0) throw BadReduction(std::to_string(p_) + " divides the denominator of " + q.str());
  std::uint64_t nu = mpz_fdiv_ui(q.raw().get_num_mpz_t(), p_);
  return du == 1 ? nu : mul(nu, inv(du));
}

std::uint64_t PrimeFieldCtx::smallest_nonresidue() const {
  for (std::uint64_t n = 2; n < p_; ++n)
    if (legendre_symbol(n, *this) == -1) return n;
  throw std::logic_error("no non-residue found");
}

std::uint64_t fp_pow(std::uint64_t base, std::uint64_t exp, const PrimeFieldCtx& ctx) {
  return powmod(base, exp, ctx.p());
}

int legendre_symbol(std::uint64_t a, const PrimeFieldCtx& ctx) {
  a %= ctx.p();
  if (a == 0) return 0;
  return fp_pow(a, (ctx.p() - 1) / 2, ctx) == 1 ? 1 : -1;
}

std::optional<std::uint64_t> sqrt_mod_p(std::uint64_t a, const PrimeFieldCtx& ctx) {
  const std::uint64_t p = ctx.p();
  a %= p;
  if (a == 0) return 0;
  if (legendre_symbol(a, ctx) != 1) return std::nullopt;
  std::uint64_t r;
  if (p % 4 == 3) {
    r = fp_pow(a, (p + 1) / 4, ctx);
  } else {
    // Tonelli-Shanks.
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    std::uint64_t z = 2;
    while (legendre_symbol(z, ctx) != -1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = fp_pow(z, q, ctx);
    std::uint64_t t = fp_pow(a, q, ctx);
    r = fp_pow(a, (q + 1) / 2, ctx);
    while (t != 1) {
      std::uint64_t i = 0;
      std::uint64_t tt = t;
      while (tt != 1) {
        tt = ctx.mul(tt, tt);
        ++i;
      }
      std::uint64_t b = c;
      for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = ctx.mul(b, b);
      m = i;
      c = ctx.mul(b, b);
      t = ctx.mul(t, c);
      r = ctx.mul(r, b);
    }
  }
  return std::min(r, p - r);
}

std::vector<std::uint64_t> binomials_mod_p(std::uint64_t m, const PrimeFieldCtx& ctx) {
  if (m >= ctx.p()) throw std::invalid_argument("binomials_mod_p needs m < p");
  const auto& f = ctx.factorials();
  const auto& fi = ctx.inverse_factorials();
  std::vector<std::uint64_t> row(m + 1);
  for (std::uint64_t k = 0; k <= m; ++k) row[k] = ctx.mul(f[m], ctx.mul(fi[k], fi[m - k]));
  return row;
}

}  // namespace ksand
