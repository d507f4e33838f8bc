#include "ksand/maps/maps.hpp"

#include <algorithm>

namespace ksand {

namespace {

using MF = MapFormula;
using PF = ParamFamily;

MapDescriptor md(std::string id, std::string src, std::string tgt, MF f, PF fam, int deg, Rational two_form,
                 bool inv, std::string exc) {
  MapDescriptor d;
  d.map_id = std::move(id);
  d.source_id = std::move(src);
  d.target_id = std::move(tgt);
  d.formula = f;
  d.family = fam;
  d.degree = deg;
  d.two_form_factor = std::move(two_form);
  d.involution = inv;
  d.exceptional_locus = std::move(exc);
  return d;
}

const std::vector<MapDescriptor> kMaps = {
    md("PSI", "J1", "Y_RANK18", MF::Psi, PF::Rank18, 2, 2, false, "none"),
    md("PHI", "Y_RANK18", "J7", MF::Phi, PF::Rank18, 2, 1, false, "u = 0"),
    md("IOTA", "J1", "J1", MF::Iota, PF::Rank18, 1, 1, true, "none"),
    md("JMATH", "J1", "J1", MF::JInvolution, PF::Rank18, 1, 1, true, "t = 0"),
    md("JMATH_Y", "Y_RANK18", "Y_RANK18", MF::JInvolution, PF::Rank18, 1, 1, true, "u = 0"),
    md("JMATH_S_PRIME", "S_PRIME_RANK18", "S_PRIME_RANK18", MF::JInvolution, PF::Rank18, 1, 1, true, "u = 0"),
    md("VGS_K", "Y_RANK18", "Y_RANK18", MF::VgsTranslation, PF::Rank18, 1, 1, true, "X = 0"),
    md("VGS_K_PRIME", "S_PRIME_RANK18", "S_PRIME_RANK18", MF::VgsTranslation, PF::Rank18, 1, 1, true, "x = 0"),
    md("VGS_K_J7", "J7", "J7", MF::VgsTranslation, PF::Rank18, 1, 1, true, "x = 0"),
    md("ISOG", "Y_RANK18", "S_PRIME_RANK18", MF::Isogeny, PF::Rank18, 2, 1, false, "X = 0"),
    md("DUAL_ISOG", "S_PRIME_RANK18", "Y_RANK18", MF::DualIsogeny, PF::Rank18, 2, 2, false, "x = 0"),
    md("PHI_PRIME", "S_PRIME_RANK18", "Y_PRIME_RANK18", MF::Phi, PF::Rank18, 2, 1, false, "u = 0"),
    md("CHI", "J7", "Y_PRIME_RANK18", MF::Isogeny, PF::Rank18, 2, 1, false, "x = 0"),
    md("CHI_PRIME", "Y_PRIME_RANK18", "J7", MF::DualIsogeny, PF::Rank18, 2, 2, false, "X = 0"),
    md("PSI_17", "S_17_A", "Y_17", MF::Psi, PF::Rank17, 2, 2, false, "none"),
    md("IOTA_17", "S_17_A", "S_17_A", MF::Iota, PF::Rank17, 1, 1, true, "none"),
    md("JMATH_17", "S_17_A", "S_17_A", MF::JInvolution, PF::Rank17, 1, 1, true, "t = 0"),
    md("JMATH_Y17", "Y_17", "Y_17", MF::JInvolution, PF::Rank17, 1, 1, true, "u = 0"),
    md("JMATH_S_PRIME17", "S_PRIME_17", "S_PRIME_17", MF::JInvolution, PF::Rank17, 1, 1, true, "u = 0"),
    md("PHI_17", "Y_17", "S_17_B", MF::Phi, PF::Rank17, 2, 1, false, "u = 0"),
    md("VGS_K_17", "S_17_B", "S_17_B", MF::VgsTranslation, PF::Rank17, 1, 1, true, "x = 0"),
    md("VGS_K_Y17", "Y_17", "Y_17", MF::VgsTranslation, PF::Rank17, 1, 1, true, "X = 0"),
    md("VGS_K_PRIME17", "Y_PRIME_17", "Y_PRIME_17", MF::VgsTranslation, PF::Rank17, 1, 1, true, "X = 0"),
    md("CHI_17", "S_17_B", "Y_PRIME_17", MF::Isogeny, PF::Rank17, 2, 1, false, "x = 0"),
    md("CHI_PRIME_17", "Y_PRIME_17", "S_17_B", MF::DualIsogeny, PF::Rank17, 2, 2, false, "X = 0"),
    md("ISOG_17", "Y_17", "S_PRIME_17", MF::Isogeny, PF::Rank17, 2, 1, false, "X = 0"),
    md("DUAL_ISOG_17", "S_PRIME_17", "Y_17", MF::DualIsogeny, PF::Rank17, 2, 2, false, "x = 0"),
    md("PHI_PRIME_17", "S_PRIME_17", "Y_PRIME_17", MF::Phi, PF::Rank17, 2, 1, false, "u = 0"),
    md("SWAP_17", "Y_PRIME_17", "LEGENDRE17", MF::LegendreSwap, PF::Rank17, 1, 1, false,
       "X = (v^2-4)(v-L2')(v-L3')"),
};

template <class Field>
using E = typename Field::Elem;

template <class Field>
E<Field> checked_inverse(const Field& F, const E<Field>& v, const std::string& what) {
  if (is_zero(v)) throw ExceptionalPoint("exceptional locus: " + what + " vanishes");
  return F.one() / v;
}

const WeierstrassSurface& as_ws(const SurfaceModel& m) {
  if (auto* w = std::get_if<WeierstrassSurface>(&m)) return *w;
  throw std::logic_error("map formula needs a Weierstrass model");
}

}  // namespace

const std::vector<MapDescriptor>& map_catalog() { return kMaps; }

const MapDescriptor& find_map(const std::string& map_id) {
  auto it = std::find_if(kMaps.begin(), kMaps.end(), [&](const MapDescriptor& d) { return d.map_id == map_id; });
  if (it == kMaps.end()) throw std::invalid_argument("unknown map id: " + map_id);
  return *it;
}

BoundMap bind_map(const std::string& map_id, const std::vector<Rational>& params,
                  const std::optional<std::string>& target_override) {
  BoundMap b;
  b.desc = find_map(map_id);
  if (target_override) b.desc.target_id = *target_override;
  b.params = params;
  b.source = catalog(b.desc.source_id, params);
  b.target = catalog(b.desc.target_id, params);
  return b;
}

template <class Field>
bool on_surface(const SurfaceModel& s, const Field& F, const FiberedPoint<Field>& P) {
  if (auto* w = std::get_if<WeierstrassSurface>(&s)) return is_on_surface(*w, F, P);
  if (auto* c = std::get_if<AffineDoubleCover>(&s)) return is_on_surface(*c, F, P);
  throw std::logic_error("point membership needs a fibered model");
}

template <class Field>
FiberedPoint<Field> apply_map(const BoundMap& m, const Field& F, const FiberedPoint<Field>& P) {
  const auto& t = P.base;
  const auto& x = P.x;
  const auto& y = P.y;
  switch (m.desc.formula) {
    case MF::Psi:
      return {t * t, t * t * x, t * t * t * y};
    case MF::Iota:
      return {-t, x, -y};
    case MF::JInvolution: {
      auto it = checked_inverse(F, t, "base coordinate");
      auto it2 = it * it;
      return {it, x * it2 * it2, -y * it2 * it2 * it2};
    }
    case MF::Phi: {
      auto iu = checked_inverse(F, t, "base coordinate");
      auto w = (t * t - F.one()) * iu * iu;  // (u^2 - 1)/u^2
      return {t + iu, w * w * x, w * w * w * y};
    }
    case MF::VgsTranslation: {
      auto p1 = eval_in(as_ws(m.source).a4, F, t);
      auto ix = checked_inverse(F, x, "x");
      return {t, p1 * ix, -p1 * y * ix * ix};
    }
    case MF::Isogeny: {
      auto p1 = eval_in(as_ws(m.source).a4, F, t);
      auto ix = checked_inverse(F, x, "x");
      auto ix2 = ix * ix;
      auto four = F.from_rational(Rational(4));
      auto eight = F.from_rational(Rational(8));
      return {t, y * y * ix2 / four, y * (x * x - p1) * ix2 / eight};
    }
    case MF::DualIsogeny: {
      const auto& tgt = as_ws(m.target);
      auto p1 = eval_in(tgt.a4, F, t);
      auto p2 = eval_in(tgt.a2, F, t);
      auto ix = checked_inverse(F, x, "x");
      auto ix2 = ix * ix;
      auto c16 = F.from_rational(Rational(16));
      auto c4 = F.from_rational(Rational(4));
      return {t, y * y * ix2, y * (c16 * x * x - p2 * p2 + c4 * p1) * ix2 / c16};
    }
    case MF::LegendreSwap: {
      const auto& v = t;
      auto L1 = F.from_rational(m.params.at(0));
      auto L2 = F.from_rational(m.params.at(1));
      auto L3 = F.from_rational(m.params.at(2));
      auto vq = v * v - F.from_rational(Rational(4));
      auto G = vq * (v - L2) * (v - L3);
      auto Fv = G * (v - L1);
      auto id = checked_inverse(F, x - G, "X - (v^2-4)(v-L2')(v-L3')");
      return {v + Fv * id, v, y * Fv * id * id};
    }
  }
  throw std::logic_error("unhandled map formula");
}

template <class Field>
FiberedPoint<Field> double_point(const WeierstrassSurface& s, const Field& F, const FiberedPoint<Field>& P) {
  auto a2 = eval_in(s.a2, F, P.base);
  auto a4 = eval_in(s.a4, F, P.base);
  auto two = F.from_rational(Rational(2));
  auto three = F.from_rational(Rational(3));
  auto iy = checked_inverse(F, two * P.y, "2y");
  auto lam = (three * P.x * P.x + two * a2 * P.x + a4) * iy;
  auto x2 = lam * lam - a2 - two * P.x;
  auto y2 = -(P.y + lam * (x2 - P.x));
  return {P.base, x2, y2};
}

WeierstrassSurface vgs_quotient(const WeierstrassSurface& s) {
  if (!s.a6.zero()) throw std::invalid_argument(s.catalog_id + ": VGS quotient needs a6 = 0");
  if (s.a4.zero()) throw std::invalid_argument(s.catalog_id + ": VGS quotient needs a4 != 0");
  WeierstrassSurface q;
  q.catalog_id = "vgs(" + s.catalog_id + ")";
  q.base_variable = s.base_variable;
  q.a2 = s.a2.scaled(Rational(-1, 2));
  q.a4 = (s.a2 * s.a2).scaled(Rational(1, 16)) - s.a4.scaled(Rational(1, 4));
  return q;
}

template FiberedPoint<FpField> apply_map(const BoundMap&, const FpField&, const FiberedPoint<FpField>&);
template FiberedPoint<RationalField> apply_map(const BoundMap&, const RationalField&,
                                               const FiberedPoint<RationalField>&);
template bool on_surface(const SurfaceModel&, const FpField&, const FiberedPoint<FpField>&);
template bool on_surface(const SurfaceModel&, const RationalField&, const FiberedPoint<RationalField>&);
template FiberedPoint<FpField> double_point(const WeierstrassSurface&, const FpField&, const FiberedPoint<FpField>&);
template FiberedPoint<RationalField> double_point(const WeierstrassSurface&, const RationalField&,
                                                  const FiberedPoint<RationalField>&);

}  // namespace ksand
