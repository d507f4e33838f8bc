#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ksand/arith/rational.hpp"

namespace ksand {

// Dense univariate polynomial, ascending coefficients, trailing zeros stripped.
// The zero polynomial has no coefficients and degree -1.
template <class R>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const R& c) { if (!is_zero(c)) c_.push_back(c); }  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(R(c)) {}                       // NOLINT(google-explicit-constructor)
  Polynomial(std::initializer_list<R> cs) : c_(cs) { trim(); }
  explicit Polynomial(std::vector<R> cs) : c_(std::move(cs)) { trim(); }

  static Polynomial monomial(const R& c, int k) {
    std::vector<R> v(static_cast<std::size_t>(k) + 1, R());
    v[k] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : R(); }
  R leading() const { return c_.empty() ? R() : c_.back(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.zero() || b.zero()) return Polynomial();
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, R());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial scaled(const R& s) const {
    Polynomial r = *this;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
  }

  Polynomial pow(int e) const {
    Polynomial r(R(1)), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<R> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * R(static_cast<long>(i));
    return Polynomial(std::move(r));
  }

  R operator()(const R& x) const {
    R acc = R();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // p(q(x)).
  Polynomial compose(const Polynomial& q) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Polynomial(*it);
    return acc;
  }

  // x^deg * p(1/x) padded to the given formal degree.
  Polynomial reversed(int formal_degree) const {
    if (degree() > formal_degree) throw std::invalid_argument("reversal below actual degree");
    std::vector<R> r(static_cast<std::size_t>(formal_degree) + 1, R());
    for (std::size_t i = 0; i < c_.size(); ++i) r[formal_degree - i] = c_[i];
    return Polynomial(std::move(r));
  }

  std::string str(const std::string& var = "u") const {
    if (zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      if (is_zero(c_[k])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[k] << ")";
      if (k >= 1) os << "*" << var;
      if (k >= 2) os << "^" << k;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
bool is_zero(const Polynomial<R>& p) { return p.zero(); }

using UniPoly = Polynomial<Rational>;
// Polynomial in x whose coefficients are polynomials in a second variable w.
using BiPoly = Polynomial<UniPoly>;

// Division with remainder over a field.
template <class R>
std::pair<Polynomial<R>, Polynomial<R>> divmod(const Polynomial<R>& a, const Polynomial<R>& b) {
  if (b.zero()) throw std::domain_error("polynomial division by zero");
  std::vector<R> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Polynomial<R>(), a};
  std::vector<R> quo(static_cast<std::size_t>(a.degree() - db) + 1, R());
  R inv_lc = R(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    R c = rem[k] * inv_lc;
    quo[k - db] = c;
    if (is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coeffs()[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<R>(std::move(quo)), Polynomial<R>(std::move(rem))};
}

template <class R>
Polynomial<R> monic(const Polynomial<R>& p) {
  if (p.zero()) return p;
  return p.scaled(R(1) / p.leading());
}

template <class R>
Polynomial<R> gcd(Polynomial<R> a, Polynomial<R> b) {
  while (!b.zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Exact quotient; throws if b does not divide a.
template <class R>
Polynomial<R> exact_div(const Polynomial<R>& a, const Polynomial<R>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

// Evaluate a rational polynomial inside another field (Rational, Fp, ...).
template <class Field>
typename Field::Elem eval_in(const UniPoly& p, const Field& F, const typename Field::Elem& x) {
  auto acc = F.zero();
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + F.from_rational(*it);
  return acc;
}

template <class Field>
typename Field::Elem eval_in(const BiPoly& f, const Field& F, const typename Field::Elem& x,
                             const typename Field::Elem& w) {
  auto acc = F.zero();
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + eval_in(*it, F, w);
  return acc;
}

// Lift a univariate polynomial in w into a BiPoly constant in x.
inline BiPoly as_bipoly_in_w(const UniPoly& p) { return BiPoly(p); }
// x as a BiPoly.
inline BiPoly bipoly_x() { return BiPoly::monomial(UniPoly(Rational(1)), 1); }

}  // namespace ksand
