#include "ksand/surfaces/degeneration.hpp"

#include <stdexcept>

#include "ksand/moduli.hpp"
#include "ksand/surfaces/catalog.hpp"

namespace ksand {

namespace {

UniPoly value_at_zero(const std::vector<Rational>& xs, const std::vector<UniPoly>& ys) {
  UniPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational w(1);
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) w *= -xs[j] / (xs[i] - xs[j]);
    acc += ys[i].scaled(w);
  }
  return acc;
}

}  // namespace

WeierstrassSurface rank17_degeneration_limit(const std::string& rank17_id, const Rational& k1, const Rational& k2) {
  if (k1 == Rational(-1) || k2 == Rational(-1) || k2 == Rational(1))
    throw DegenerateInput("degeneration needs k1 != -1 and k2 != +-1");
  auto prime = [](const Rational& k) { return (Rational(1) - k) / (Rational(1) + k); };
  const Rational k1p = prime(k1), k2p = prime(k2);
  // a2 e, a4 e^2 and a6 e^3 have degree at most 6 in e; eight nodes leave one spare for the check.
  constexpr int kNodes = 8;
  std::vector<Rational> es;
  std::vector<UniPoly> a2, a4, a6;
  WeierstrassSurface base;
  for (int j = 1; j <= kNodes; ++j) {
    const Rational eps(j);
    const Rational epsp = Rational(2) * eps / ((k1 + 1) * (k2 - 1));
    auto L = degeneration_moduli(k1p, k2p, epsp);
    base = catalog_weierstrass(rank17_id, {L[0], L[1], L[2]});
    const Rational e = eps * eps;
    es.push_back(e);
    a2.push_back(base.a2.scaled(e));
    a4.push_back(base.a4.scaled(e * e));
    a6.push_back(base.a6.scaled(e * e * e));
  }
  auto limit = [&](const std::vector<UniPoly>& ys) {
    UniPoly all = value_at_zero(es, ys);
    UniPoly fewer = value_at_zero({es.begin(), es.end() - 1}, {ys.begin(), ys.end() - 1});
    if (!(all == fewer)) throw std::logic_error("rescaled coefficients are not polynomial of the expected degree");
    return all;
  };
  WeierstrassSurface out;
  out.catalog_id = rank17_id + "_LIMIT";
  out.base_variable = base.base_variable;
  out.a2 = limit(a2);
  out.a4 = limit(a4);
  out.a6 = limit(a6);
  out.rescaling = "(x, y) -> (x / eps^2, y / eps^3), eps -> 0";
  return out;
}

}  // namespace ksand
