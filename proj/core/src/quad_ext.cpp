#include "ksand/arith/quad_ext.hpp"

#include <cmath>
#include <stdexcept>

namespace ksand {

QuadExt::QuadExt(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(b), d_(d) {
  normalize();
}

void QuadExt::normalize() {
  if (b_.is_zero()) {
    d_ = Rational(0);
    return;
  }
  Rational r;
  if (d_.perfect_square(&r)) {
    a_ += b_ * r;
    b_ = Rational(0);
    d_ = Rational(0);
  }
}

QuadExt QuadExt::sqrt_of(const Rational& d, int sign) {
  return QuadExt(Rational(0), Rational(sign < 0 ? -1 : 1), d);
}

std::optional<Rational> QuadExt::as_rational() const {
  if (is_rational()) return a_;
  return std::nullopt;
}

double QuadExt::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(d_.to_double());
}

const Rational& QuadExt::common_d(const QuadExt& o) const {
  if (b_.is_zero()) return o.d_;
  if (o.b_.is_zero() || d_ == o.d_) return d_;
  throw std::domain_error("mixing quadratic extensions sqrt(" + d_.str() + ") and sqrt(" + o.d_.str() + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  Rational d = common_d(o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = d;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  Rational d = common_d(o);
  a_ -= o.a_;
  b_ -= o.b_;
  d_ = d;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Rational d = common_d(o);
  Rational na = a_ * o.a_ + d * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  d_ = d;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  Rational n = o.norm();
  if (n.is_zero()) throw std::domain_error("division by zero in quadratic extension");
  Rational d = common_d(o);
  QuadExt inv(o.a_ / n, -o.b_ / n, o.b_.is_zero() ? d : o.d_);
  return *this *= inv;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.b_.is_zero() && y.b_.is_zero()) return x.a_ == y.a_;
  if (x.b_.is_zero() != y.b_.is_zero()) return false;
  return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
}

std::string QuadExt::str() const {
  if (is_rational()) return a_.str();
  std::string s;
  if (!a_.is_zero()) s = a_.str() + (b_.sign() > 0 ? " + " : " - ");
  else if (b_.sign() < 0) s = "-";
  if (b_.abs() != Rational(1)) s += b_.abs().str() + "*";
  s += "sqrt(" + d_.str() + ")";
  return s;
}

}  // namespace ksand
