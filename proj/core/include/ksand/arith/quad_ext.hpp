#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "ksand/arith/rational.hpp"

namespace ksand {

// a + b*sqrt(d) with a fixed non-square d. When d is a rational square the
// value collapses to a plain Rational (b = 0, d = 0).
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long a) : a_(a) {}             // NOLINT(google-explicit-constructor)
  QuadExt(const Rational& a, const Rational& b, const Rational& d);

  // sign * sqrt(d), collapsed when d is a square.
  static QuadExt sqrt_of(const Rational& d, int sign = 1);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& d() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  std::optional<Rational> as_rational() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadExt conj() const { return QuadExt(a_, -b_, d_); }
  Rational norm() const { return a_ * a_ - d_ * b_ * b_; }
  double to_double() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

  friend bool operator==(const QuadExt& x, const QuadExt& y);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

 private:
  const Rational& common_d(const QuadExt& o) const;
  void normalize();

  Rational a_;
  Rational b_;
  Rational d_;  // 0 when the value is rational
};

inline bool is_zero(const QuadExt& q) { return q.is_zero(); }

}  // namespace ksand
