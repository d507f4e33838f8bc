#include "ksand/surfaces/catalog.hpp"

#include <algorithm>

#include "ksand/moduli.hpp"

namespace ksand {

namespace {

using R = Rational;

UniPoly C(const R& c) { return UniPoly(c); }
const UniPoly U = UniPoly::x();

// Shorthands shared by the rank-18 family.
struct Rank18 {
  R l1, l2, alpha, beta;
  explicit Rank18(const std::vector<R>& p)
      : l1(p[0]), l2(p[1]), alpha((p[0] - 1) * (p[1] - 1)), beta(R(-2) * (p[0] + 1) * (p[1] + 1)) {}
  // u^2 (alpha (u + 1/u) + beta)
  UniPoly P() const { return C(alpha) * (U.pow(3) + U) + C(beta) * U.pow(2); }
  // (v^2 - 4)(alpha v + beta)
  UniPoly Q() const { return (U.pow(2) - C(4)) * (C(alpha) * U + C(beta)); }
};

// Shorthands shared by the rank-17 family, all in the primed moduli.
struct Rank17 {
  R L1, L2, L3, alpha, beta, d2, d3, d23;
  explicit Rank17(const std::vector<R>& p)
      : L1(p[0]),
        L2(p[1]),
        L3(p[2]),
        alpha(R(2) * p[0] - p[1] - p[2]),
        beta(R(2) * p[1] * p[2] - p[0] * p[1] - p[0] * p[2]),
        d2(p[0] - p[1]),
        d3(p[0] - p[2]),
        d23(p[1] - p[2]) {}
  UniPoly vq() const { return U.pow(2) - C(4); }
};

WeierstrassSurface ws(const std::string& id, const std::string& var, UniPoly a2, UniPoly a4, UniPoly a6 = {},
                      std::string rescaling = {}) {
  WeierstrassSurface s;
  s.catalog_id = id;
  s.base_variable = var;
  s.a2 = std::move(a2);
  s.a4 = std::move(a4);
  s.a6 = std::move(a6);
  s.rescaling = std::move(rescaling);
  return s;
}

BiPoly X() { return bipoly_x(); }
BiPoly W(const UniPoly& p) { return as_bipoly_in_w(p); }

AffineDoubleCover cover(const std::string& id, BiPoly f, std::string x = "x", std::string w = "w") {
  return AffineDoubleCover{id, std::move(x), std::move(w), std::move(f)};
}

// -c (x^2 - 4)(x - w)(w - r1)(w - r2)(w - r3)
BiPoly twisted_legendre(const R& c, const R& r1, const R& r2, const R& r3) {
  UniPoly cubic = (U - C(r1)) * (U - C(r2)) * (U - C(r3));
  BiPoly quad = X() * X() - BiPoly(UniPoly(R(4)));
  return (quad * (X() - W(U)) * W(cubic)).scaled(UniPoly(-c));
}

const std::vector<CatalogEntry> kEntries = {
    {"MIRROR_G2G3", {"lambda"}, "weierstrass", "mirror-quartic fibration, monic form of 4X^3 - g2 X - g3"},
    {"J4", {"l1", "l2"}, "weierstrass", "product Kummer fibration over x1, Weierstrass form"},
    {"J4_AFFINE", {"l1", "l2"}, "double_cover", "product Kummer double cover y^2 = E1(x1) E2(x2)"},
    {"J1", {"l1", "l2"}, "weierstrass", "product Kummer fibration with two I8 fibers, symmetric scaling"},
    {"J1_UNSCALED", {"l1", "l2"}, "weierstrass", "product Kummer fibration with two I8 fibers, before rescaling"},
    {"Y_RANK18", {"l1", "l2"}, "weierstrass", "quotient by iota, two I4* fibers"},
    {"J7", {"l1", "l2"}, "weierstrass", "quotient by the u -> 1/u involution, base v = u + 1/u"},
    {"S_PRIME_RANK18", {"l1", "l2"}, "weierstrass", "isogenous product Kummer, van Geemen-Sarti quotient of Y_RANK18"},
    {"Y_PRIME_RANK18", {"l1", "l2"}, "weierstrass", "twisted Legendre fibration, consistent inner coefficient"},
    {"Y_PRIME_RANK18_PRINTED", {"l1", "l2"}, "weierstrass", "twisted Legendre fibration, inner coefficient as typeset"},
    {"LEGENDRE18", {"l1", "l2"}, "double_cover", "twisted Legendre pencil, l = +sqrt(l1 l2)"},
    {"LEGENDRE19", {"lambda"}, "double_cover", "twisted Legendre pencil on the two-isogeny locus"},
    {"SHIODA_SEXTIC", {"l1", "l2", "l3"}, "double_cover", "Shioda sextic double cover, x = X, w = U"},
    {"S_PRIME_17", {"L1p", "L2p", "L3p"}, "weierstrass", "Kummer of the isogenous Jacobian"},
    {"Y_17", {"L1p", "L2p", "L3p"}, "weierstrass", "rank-17 quotient by iota"},
    {"S_17_A", {"L1p", "L2p", "L3p"}, "weierstrass", "rank-17 Kummer fibration over t"},
    {"S_17_B", {"L1p", "L2p", "L3p"}, "weierstrass", "rank-17 Kummer fibration over v"},
    {"Y_PRIME_17", {"L1p", "L2p", "L3p"}, "weierstrass", "rank-17 twisted Legendre fibration"},
    {"LEGENDRE17_TILDE", {"L1", "L2", "L3"}, "double_cover", "twisted Legendre pencil in unprimed moduli with factor nu"},
    {"LEGENDRE17", {"L1p", "L2p", "L3p"}, "double_cover", "twisted Legendre pencil in primed moduli"},
    {"QUARTIC", {"A", "B", "C", "D"}, "quartic", "normal form of the general Kummer quartic"},
    {"MIRROR_CUBIC", {"lambda"}, "mirror_cubic", "n = 3 mirror family with mu = 1/lambda^4"},
    {"ELLIPTIC_E", {"lambda"}, "elliptic_curve", "Legendre curve y^2 = x(x-1)(x-lambda)"},
    {"ELLIPTIC_E_PRIME", {"lambda"}, "elliptic_curve", "two-isogenous curve of the Legendre curve"},
};

R nu_of(const R& L1, const R& L2, const R& L3) {
  R den = (L2 - L3) * (L2 - L3) * (L1 * L1 - R(4));
  if (den.is_zero()) throw DegenerateInput("vanishing factor in nu: (L2 - L3)^2 (L1^2 - 4)");
  return R(16) * (L1 - L3) * (L1 - L2) / den;
}

}  // namespace

bool WeierstrassSurface::within_k3_bounds() const {
  return a2.degree() <= 4 && a4.degree() <= 8 && a6.degree() <= 12;
}

const std::vector<CatalogEntry>& catalog_entries() { return kEntries; }

const CatalogEntry& catalog_entry(const std::string& id) {
  auto it = std::find_if(kEntries.begin(), kEntries.end(), [&](const CatalogEntry& e) { return e.id == id; });
  if (it == kEntries.end()) throw std::invalid_argument("unknown catalog id: " + id);
  return *it;
}

UniPoly mirror_g2(const R& lam) {
  R l2 = lam * lam;
  UniPoly inner = U.pow(4) + C(R(8) * l2) * U.pow(3) + C((R(4) * l2 - 1) * (R(4) * l2 + 1)) * U.pow(2) +
                  C(R(8) * l2) * U + C(1);
  return (U.pow(2) * inner).scaled(R(4) / (R(3) * l2 * l2));
}

UniPoly mirror_g3(const R& lam) {
  R l2 = lam * lam;
  UniPoly q = U.pow(2) + C(R(4) * l2) * U + C(1);
  UniPoly s = C(2) * U.pow(4) + C(R(16) * l2) * U.pow(3) + C(R(32) * l2 * l2 - 5) * U.pow(2) + C(R(16) * l2) * U +
              C(2);
  return (U.pow(3) * q * s).scaled(R(4) / (R(27) * l2 * l2 * l2));
}

UniPoly mirror_torsion_section_x(const R& lam) {
  R l2 = lam * lam;
  return (U * (U.pow(2) + C(R(4) * l2) * U + C(1))).scaled(R(-1) / (R(3) * l2));
}

UniPoly mirror_torsion_section_x_as_printed(const R& lam) {
  R l2 = lam * lam;
  return (U * (C(4) * U - U.pow(2) - C(1))).scaled(R(-1) / (R(3) * l2));
}

SurfaceModel catalog(const std::string& id, const std::vector<R>& p) {
  const CatalogEntry& e = catalog_entry(id);
  if (p.size() != e.parameters.size())
    throw std::invalid_argument(id + " takes " + std::to_string(e.parameters.size()) + " parameters, got " +
                                std::to_string(p.size()));

  if (id == "MIRROR_G2G3") {
    if (p[0].is_zero()) throw DegenerateInput("lambda must be nonzero");
    return ws(id, "u", {}, mirror_g2(p[0]).scaled(R(-1, 4)), mirror_g3(p[0]).scaled(R(-1, 4)),
              "X = x, Y = 2y from Y^2 = 4X^3 - g2 X - g3");
  }
  if (id == "J4") {
    UniPoly c = U * (U - C(1)) * (U - C(p[0]));
    return ws(id, "x1", (c * C(-(p[1] + 1))), c * c * C(p[1]), {},
              "x = c x2, y = c^2 y12 with c = x1(x1-1)(x1-l1)");
  }
  if (id == "J4_AFFINE") {
    UniPoly e1 = U * (U - C(1)) * (U - C(p[0]));
    BiPoly e2 = X() * (X() - BiPoly(UniPoly(R(1)))) * (X() - BiPoly(UniPoly(p[1])));
    return cover(id, e2 * W(e1), "x2", "x1");
  }
  if (id == "J1") {
    Rank18 r(p);
    return ws(id, "t", C(r.alpha) * (U.pow(4) + C(1)) + C(r.beta) * U.pow(2), C(R(16) * r.l1 * r.l2) * U.pow(4), {},
              "t^2 (t^2 + t^-2) expanded");
  }
  if (id == "J1_UNSCALED") {
    Rank18 r(p);
    return ws(id, "t", C((r.l1 - 1) * (r.l1 - 1)) * U.pow(4) + C(r.beta) * U.pow(2) + C((r.l2 - 1) * (r.l2 - 1)),
              C(R(16) * r.l1 * r.l2) * U.pow(4));
  }
  if (id == "Y_RANK18") {
    Rank18 r(p);
    return ws(id, "u", r.P(), C(R(16) * r.l1 * r.l2) * U.pow(4), {}, "u^2 (u + u^-1) expanded");
  }
  if (id == "J7") {
    Rank18 r(p);
    UniPoly vq = U.pow(2) - C(4);
    return ws(id, "v", r.Q(), C(R(16) * r.l1 * r.l2) * vq * vq);
  }
  if (id == "S_PRIME_RANK18") {
    Rank18 r(p);
    UniPoly P = r.P();
    return ws(id, "u", P.scaled(R(-1, 2)), (P * P - C(R(64) * r.l1 * r.l2) * U.pow(4)).scaled(R(1, 16)), {},
              "u^2 (u + u^-1) expanded");
  }
  if (id == "Y_PRIME_RANK18" || id == "Y_PRIME_RANK18_PRINTED") {
    Rank18 r(p);
    UniPoly vq = U.pow(2) - C(4);
    R inner_beta = id == "Y_PRIME_RANK18" ? r.beta : -(p[0] + 1) * (p[1] + 1);
    UniPoly inner = C(r.alpha) * U + C(inner_beta);
    return ws(id, "v", r.Q().scaled(R(-1, 2)), (vq * vq * (inner * inner - C(R(64) * r.l1 * r.l2))).scaled(R(1, 16)));
  }
  if (id == "LEGENDRE18") {
    R prod = p[0] * p[1];
    R l;
    if (!prod.perfect_square(&l)) throw DegenerateInput("LEGENDRE18 needs l1 l2 to be a rational square");
    if (l.is_zero() || p[0].is_zero()) throw DegenerateInput("LEGENDRE18 needs l1 l2 nonzero");
    R r1 = (l + 1) * (l + 1) / (R(4) * l);
    R r2 = (l + p[0]) * (l + p[0]) / (R(4) * l * p[0]);
    BiPoly xf = X() * (X() - BiPoly(UniPoly(R(1)))) * (X() - W(U));
    return cover(id, (xf * W((U - C(r1)) * (U - C(r2)))).scaled(UniPoly(R(16) * l)));
  }
  if (id == "LEGENDRE19") {
    R lam = p[0];
    R s;
    if (!(lam * lam - 1).perfect_square(&s))
      throw DegenerateInput("LEGENDRE19 needs lambda^2 - 1 to be a rational square");
    R l = R(1) + R(2) * lam * s - R(2) * lam * lam;
    R l2 = lam * lam;
    BiPoly xf = X() * (X() - BiPoly(UniPoly(R(1)))) * (X() - W(U));
    return cover(id, (xf * W((U - C(l2)) * (U - C(R(1) + l2)))).scaled(UniPoly(R(16) * l)));
  }
  if (id == "SHIODA_SEXTIC") {
    // Y^2 = U (U - X + 1) prod (li^2 U - li X + 1), x = X, w = U.
    BiPoly Ub = W(U);
    BiPoly f = Ub * (Ub - X() + BiPoly(UniPoly(R(1))));
    for (const R& li : p) f = f * (Ub.scaled(UniPoly(li * li)) - X().scaled(UniPoly(li)) + BiPoly(UniPoly(R(1))));
    return cover(id, f, "X", "U");
  }
  if (id == "S_PRIME_17") {
    Rank17 r(p);
    UniPoly R3 = U.pow(2) - C(r.L3) * U + C(1);
    UniPoly R2 = U.pow(2) - C(r.L2) * U + C(1);
    return ws(id, "u", -(U * (R3.scaled(r.d2) + R2.scaled(r.d3))), U.pow(2) * R3 * R2 * C(r.d2 * r.d3));
  }
  if (id == "Y_17") {
    Rank17 r(p);
    UniPoly q = U.pow(2) + C(1) - C(r.L1) * U;
    return ws(id, "u", (U * (C(r.alpha) * (U.pow(2) + C(1)) + C(r.beta) * U)).scaled(R(2)),
              U.pow(2) * q * q * C(r.d23 * r.d23), {}, "u^2 (u + u^-1) expanded");
  }
  if (id == "S_17_A") {
    Rank17 r(p);
    UniPoly q = U.pow(4) + C(1) - C(r.L1) * U.pow(2);
    return ws(id, "t", (C(r.alpha) * (U.pow(4) + C(1)) + C(r.beta) * U.pow(2)).scaled(R(2)), q * q * C(r.d23 * r.d23),
              {}, "t^2 (t^2 + t^-2) expanded");
  }
  if (id == "S_17_B") {
    Rank17 r(p);
    UniPoly vq = r.vq();
    UniPoly q = U - C(r.L1);
    return ws(id, "v", (vq * (C(r.alpha) * U + C(r.beta))).scaled(R(2)), vq * vq * q * q * C(r.d23 * r.d23));
  }
  if (id == "Y_PRIME_17") {
    Rank17 r(p);
    UniPoly vq = r.vq();
    return ws(id, "v", -(vq * (C(r.alpha) * U + C(r.beta))),
              vq * vq * (U - C(r.L2)) * (U - C(r.L3)) * C(r.d2 * r.d3));
  }
  if (id == "LEGENDRE17_TILDE") {
    return cover(id, twisted_legendre(nu_of(p[0], p[1], p[2]), p[0], p[1], p[2]), "x", "v");
  }
  if (id == "LEGENDRE17") {
    return cover(id, twisted_legendre(R(1), p[0], p[1], p[2]));
  }
  if (id == "QUARTIC") {
    KummerQuarticParams k{p[0], p[1], p[2], p[3]};
    if (!k.identity_residual().is_zero())
      throw DegenerateInput("QUARTIC parameters violate D^2 = A^2 + B^2 + C^2 + ABC - 4");
    return QuarticSurface{id, {R(1), -p[0], -p[1], -p[2], R(2) * p[3]}};
  }
  if (id == "MIRROR_CUBIC") {
    if (p[0].is_zero()) throw DegenerateInput("lambda must be nonzero");
    return MirrorCubic{id, p[0], R(1) / p[0].pow(4)};
  }
  if (id == "ELLIPTIC_E") {
    return EllipticCurveModel{id, -(p[0] + 1), p[0], R(0)};
  }
  if (id == "ELLIPTIC_E_PRIME") {
    return EllipticCurveModel{id, (p[0] + 1) / R(2), (R(1) - p[0]) * (R(1) - p[0]) / R(4), R(0)};
  }
  throw std::logic_error("catalog entry without a constructor: " + id);
}

WeierstrassSurface catalog_weierstrass(const std::string& id, const std::vector<R>& params) {
  auto m = catalog(id, params);
  if (auto* w = std::get_if<WeierstrassSurface>(&m)) return *w;
  throw std::invalid_argument(id + " is not a Weierstrass fibration");
}

AffineDoubleCover catalog_double_cover(const std::string& id, const std::vector<R>& params) {
  auto m = catalog(id, params);
  if (auto* c = std::get_if<AffineDoubleCover>(&m)) return *c;
  throw std::invalid_argument(id + " is not a double cover");
}

}  // namespace ksand
