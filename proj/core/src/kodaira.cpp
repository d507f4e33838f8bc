#include "ksand/surfaces/kodaira.hpp"

#include <stdexcept>

#include "ksand/poly/roots.hpp"

namespace ksand {

Invariants c4_c6_delta(const WeierstrassSurface& s) {
  UniPoly b2 = s.a2.scaled(Rational(4));
  UniPoly b4 = s.a4.scaled(Rational(2));
  UniPoly b6 = s.a6.scaled(Rational(4));
  Invariants inv;
  inv.c4 = b2 * b2 - b4.scaled(Rational(24));
  inv.c6 = -(b2 * b2 * b2) + (b2 * b4).scaled(Rational(36)) - b6.scaled(Rational(216));
  inv.delta = (inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6).scaled(Rational(1, 1728));
  if (inv.delta.zero()) throw std::domain_error(s.catalog_id + ": discriminant vanishes identically");
  return inv;
}

int KodairaType::euler_number() const {
  switch (symbol) {
    case KodairaSymbol::Smooth: return 0;
    case KodairaSymbol::In: return n;
    case KodairaSymbol::InStar: return n + 6;
    case KodairaSymbol::II: return 2;
    case KodairaSymbol::III: return 3;
    case KodairaSymbol::IV: return 4;
    case KodairaSymbol::IVStar: return 8;
    case KodairaSymbol::IIIStar: return 9;
    case KodairaSymbol::IIStar: return 10;
  }
  return 0;
}

std::string KodairaType::str() const {
  switch (symbol) {
    case KodairaSymbol::Smooth: return "smooth";
    case KodairaSymbol::In: return "I" + std::to_string(n);
    case KodairaSymbol::InStar: return "I" + std::to_string(n) + "*";
    case KodairaSymbol::II: return "II";
    case KodairaSymbol::III: return "III";
    case KodairaSymbol::IV: return "IV";
    case KodairaSymbol::IVStar: return "IV*";
    case KodairaSymbol::IIIStar: return "III*";
    case KodairaSymbol::IIStar: return "II*";
  }
  return "?";
}

KodairaType KodairaType::parse(const std::string& s) {
  if (s == "smooth") return {};
  if (s == "II") return {KodairaSymbol::II, 0};
  if (s == "III") return {KodairaSymbol::III, 0};
  if (s == "IV") return {KodairaSymbol::IV, 0};
  if (s == "IV*") return {KodairaSymbol::IVStar, 0};
  if (s == "III*") return {KodairaSymbol::IIIStar, 0};
  if (s == "II*") return {KodairaSymbol::IIStar, 0};
  if (s.size() >= 2 && s[0] == 'I') {
    bool star = s.back() == '*';
    std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      int n = std::stoi(digits);
      return {star ? KodairaSymbol::InStar : KodairaSymbol::In, n};
    }
  }
  throw std::invalid_argument("unknown Kodaira symbol: " + s);
}

KodairaType kodaira_from_orders(VanishingOrders o) {
  while (o.c4 >= 4 && o.c6 >= 6 && o.delta >= 12) {
    o.c4 -= 4;
    o.c6 -= 6;
    o.delta -= 12;
  }
  if (o.delta == 0) return {};
  if (o.c4 == 0) return {KodairaSymbol::In, o.delta};
  if (o.c4 == 2 && o.c6 == 3 && o.delta >= 6) return {KodairaSymbol::InStar, o.delta - 6};
  switch (o.delta) {
    case 2: return {KodairaSymbol::II, 0};
    case 3: return {KodairaSymbol::III, 0};
    case 4: return {KodairaSymbol::IV, 0};
    case 6: return {KodairaSymbol::InStar, 0};
    case 8: return {KodairaSymbol::IVStar, 0};
    case 9: return {KodairaSymbol::IIIStar, 0};
    case 10: return {KodairaSymbol::IIStar, 0};
    default: break;
  }
  throw std::domain_error("vanishing orders (" + std::to_string(o.c4) + ", " + std::to_string(o.c6) + ", " +
                          std::to_string(o.delta) + ") match no Kodaira type");
}

VanishingOrders vanishing_orders(const Invariants& inv, const std::optional<Rational>& place) {
  if (place) return {order_at(inv.c4, *place), order_at(inv.c6, *place), order_at(inv.delta, *place)};
  auto at_inf = [](const UniPoly& f, int weight) {
    if (f.zero()) return kInfiniteOrder;
    if (f.degree() > weight)
      throw std::domain_error("coefficient degree exceeds the K3 weight at infinity");
    return weight - f.degree();
  };
  return {at_inf(inv.c4, 8), at_inf(inv.c6, 12), at_inf(inv.delta, 24)};
}

KodairaType kodaira_classify(const WeierstrassSurface& s, const std::optional<Rational>& place) {
  return kodaira_from_orders(vanishing_orders(c4_c6_delta(s), place));
}

}  // namespace ksand
