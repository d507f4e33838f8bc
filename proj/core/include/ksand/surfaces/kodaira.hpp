#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ksand/surfaces/models.hpp"

namespace ksand {

struct Invariants {
  UniPoly c4, c6, delta;
};

// Standard b/c invariants; throws std::domain_error when delta vanishes identically.
Invariants c4_c6_delta(const WeierstrassSurface& s);

enum class KodairaSymbol { Smooth, In, InStar, II, III, IV, IVStar, IIIStar, IIStar };

struct KodairaType {
  KodairaSymbol symbol = KodairaSymbol::Smooth;
  int n = 0;

  int euler_number() const;
  std::string str() const;  // "I8", "I4*", "I0*", "II", ..., "smooth"
  static KodairaType parse(const std::string& s);
  friend bool operator==(const KodairaType&, const KodairaType&) = default;
  friend auto operator<=>(const KodairaType& a, const KodairaType& b) { return a.str() <=> b.str(); }
};

struct VanishingOrders {
  int c4, c6, delta;
};

// Table lookup after the minimality loop. Residue characteristic zero.
KodairaType kodaira_from_orders(VanishingOrders ord);

// Place = rational u0, or infinity when place is empty.
KodairaType kodaira_classify(const WeierstrassSurface& s, const std::optional<Rational>& place);
VanishingOrders vanishing_orders(const Invariants& inv, const std::optional<Rational>& place);

}  // namespace ksand
