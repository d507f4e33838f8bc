#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ksand/arith/rational.hpp"

namespace ksand {

// Thrown when a rational cannot be reduced because p divides its denominator.
struct BadReduction : std::domain_error {
  using std::domain_error::domain_error;
};

bool is_prime_u64(std::uint64_t n);

// Odd prime p with factorial tables. Tables are only built up to
// kMaxTabulated; larger primes (map sampling at 2^31-1) skip them.
class PrimeFieldCtx {
 public:
  static constexpr std::uint64_t kMaxTabulated = 1u << 24;

  explicit PrimeFieldCtx(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  bool has_tables() const { return !factorials_.empty(); }
  const std::vector<std::uint64_t>& factorials() const;
  const std::vector<std::uint64_t>& inverse_factorials() const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t from_int(long long v) const;
  // Throws BadReduction if p divides the denominator.
  std::uint64_t reduce(const Rational& q) const;
  // Smallest quadratic non-residue, used for F_{p^2}.
  std::uint64_t smallest_nonresidue() const;

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> factorials_;
  std::vector<std::uint64_t> inverse_factorials_;
};

std::uint64_t fp_pow(std::uint64_t base, std::uint64_t exp, const PrimeFieldCtx& ctx);
int legendre_symbol(std::uint64_t a, const PrimeFieldCtx& ctx);
std::optional<std::uint64_t> sqrt_mod_p(std::uint64_t a, const PrimeFieldCtx& ctx);
std::vector<std::uint64_t> binomials_mod_p(std::uint64_t m, const PrimeFieldCtx& ctx);

// Field element bound to a context; the context must outlive it.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t v, const PrimeFieldCtx* ctx) : v_(v), ctx_(ctx) {}

  std::uint64_t value() const { return v_; }
  const PrimeFieldCtx* ctx() const { return ctx_; }
  bool is_zero() const { return v_ == 0; }

  Fp& operator+=(const Fp& o) { v_ = c(o).add(v_, o.v_); return *this; }
  Fp& operator-=(const Fp& o) { v_ = c(o).sub(v_, o.v_); return *this; }
  Fp& operator*=(const Fp& o) { v_ = c(o).mul(v_, o.v_); return *this; }
  Fp& operator/=(const Fp& o) { v_ = c(o).mul(v_, c(o).inv(o.v_)); return *this; }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const { return Fp(ctx_ ? ctx_->neg(v_) : 0, ctx_); }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }

 private:
  // Elements made with Fp() carry no context; adopt the other operand's.
  const PrimeFieldCtx& c(const Fp& o) {
    if (!ctx_) ctx_ = o.ctx_;
    if (!ctx_) throw std::logic_error("Fp arithmetic without a field context");
    return *ctx_;
  }

  std::uint64_t v_ = 0;
  const PrimeFieldCtx* ctx_ = nullptr;
};

inline bool is_zero(const Fp& a) { return a.is_zero(); }

// Field adapters used by code templated over the coefficient field.
struct RationalField {
  using Elem = Rational;
  Elem from_rational(const Rational& q) const { return q; }
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
};

struct FpField {
  using Elem = Fp;
  const PrimeFieldCtx* ctx;
  explicit FpField(const PrimeFieldCtx& c) : ctx(&c) {}
  Elem from_rational(const Rational& q) const { return Fp(ctx->reduce(q), ctx); }
  Elem from_u64(std::uint64_t v) const { return Fp(v % ctx->p(), ctx); }
  Elem zero() const { return Fp(0, ctx); }
  Elem one() const { return Fp(1, ctx); }
};

}  // namespace ksand
