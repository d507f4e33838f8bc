#include <algorithm>
#include <stdexcept>

#include "ksand/poly/roots.hpp"

namespace ksand {

namespace {

using ZPoly = std::vector<mpz_class>;

mpz_class eval_mod(const ZPoly& f, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = acc * x + *it;
    acc %= m;
  }
  if (acc < 0) acc += m;
  return acc;
}

mpz_class eval_exact(const ZPoly& f, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ZPoly derivative(const ZPoly& f) {
  ZPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  return d;
}

// gcd over F_q of two integer polynomials; returns degree of the gcd.
int gcd_degree_mod(ZPoly a, ZPoly b, unsigned long q) {
  auto reduce = [q](ZPoly& v) {
    for (auto& c : v) {
      c %= q;
      if (c < 0) c += q;
    }
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  reduce(a);
  reduce(b);
  mpz_class qz = q;
  while (!b.empty()) {
    // a mod b
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), qz.get_mpz_t());
    while (a.size() >= b.size()) {
      mpz_class c = a.back() * inv % qz;
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
      reduce(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace

UniPoly primitive_part(const UniPoly& f) {
  if (f.zero()) return f;
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  for (const auto& c : f.coeffs()) {
    mpz_class v = c.num() * (l / c.den());
    ints.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (f.leading().sign() < 0) g = -g;
  std::vector<Rational> out;
  for (auto& v : ints) out.emplace_back(mpz_class(v / g));
  return UniPoly(std::move(out));
}

UniPoly deflate(const UniPoly& f, const Rational& r) {
  return exact_div(f, UniPoly{-r, Rational(1)});
}

int order_at(const UniPoly& f, const Rational& r) {
  if (f.zero()) return kInfiniteOrder;
  int k = 0;
  UniPoly g = f;
  while (g(r).is_zero()) {
    g = deflate(g, r);
    ++k;
  }
  return k;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  std::vector<std::pair<UniPoly, int>> out;
  if (f.degree() <= 0) return out;
  UniPoly fp = f.derivative();
  UniPoly a = gcd(f, fp);
  UniPoly b = exact_div(f, a);
  UniPoly c = exact_div(fp, a);
  UniPoly d = c - b.derivative();
  int m = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(monic(g), m);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++m;
  }
  return out;
}

std::vector<Rational> rational_roots(const UniPoly& f_in) {
  if (f_in.zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  UniPoly f = f_in;
  if (f.degree() <= 0) return roots;
  if (f.coeff(0).is_zero()) {
    roots.emplace_back(0);
    while (f.coeff(0).is_zero()) f = deflate(f, Rational(0));
  }
  if (f.degree() >= 1) {
    UniPoly sq = exact_div(f, gcd(f, f.derivative()));
    UniPoly g = primitive_part(sq);
    const int n = g.degree();
    if (n == 1) {
      roots.push_back(-g.coeff(0) / g.coeff(1));
    } else {
      // H(y) = lc^(n-1) g(y/lc) is monic with integer coefficients; its integer
      // roots are lc times the rational roots of g.
      mpz_class lc = g.leading().num();
      ZPoly H(n + 1);
      mpz_class lp = 1;
      for (int i = n - 1; i >= 0; --i) {
        H[i] = g.coeff(i).num() * lp;
        lp *= lc;
      }
      H[n] = 1;
      mpz_class bound = 0;
      for (int i = 0; i < n; ++i) {
        mpz_class a = abs(H[i]);
        if (a > bound) bound = a;
      }
      bound += 1;
      ZPoly dH = derivative(H);
      unsigned long q = 3;
      for (;; q += 2) {
        if (!mpz_probab_prime_p(mpz_class(q).get_mpz_t(), 25)) continue;
        if (gcd_degree_mod(H, dH, q) == 0) break;
      }
      mpz_class qz = q;
      std::vector<mpz_class> residues;
      for (unsigned long r = 0; r < q; ++r)
        if (eval_mod(H, mpz_class(r), qz) == 0) residues.emplace_back(r);
      mpz_class limit = 2 * bound + 1;
      for (auto r : residues) {
        mpz_class mod = qz;
        while (mod <= limit) {
          mod *= mod;
          mpz_class hv = eval_mod(H, r, mod);
          mpz_class dv = eval_mod(dH, r, mod);
          mpz_class inv;
          if (!mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), mod.get_mpz_t()))
            throw std::logic_error("Hensel lift hit a non-invertible derivative");
          r = (r - hv * inv) % mod;
          if (r < 0) r += mod;
        }
        if (r > mod / 2) r -= mod;
        if (eval_exact(H, r) == 0) roots.emplace_back(r, lc);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace ksand
