#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ksand/surfaces/kodaira.hpp"

namespace ksand {

enum class PlaceKind { Rational, Factor, Infinity };

struct FiberRecord {
  PlaceKind kind = PlaceKind::Rational;
  std::optional<Rational> value;  // Rational places
  UniPoly factor;                 // Factor places: monic irreducible-over-Q-free product, no rational roots
  int count = 1;                  // number of geometric fibers in this record
  VanishingOrders orders{};
  KodairaType type;

  std::string place_label(const std::string& var) const;
};

using Census = std::map<std::string, int>;  // Kodaira symbol -> multiplicity

struct FiberSummary {
  std::string catalog_id;
  std::string base_variable;
  std::vector<FiberRecord> fibers;  // rational ascending, then factor groups, then infinity
  int euler_sum = 0;
  std::vector<std::string> collisions;

  Census census() const;
};

FiberSummary singular_fiber_summary(const WeierstrassSurface& s);

std::string census_str(const Census& c);  // "{I1 x8, I8 x2}"

struct CensusDiff {
  Census missing;     // expected but not found (counts)
  Census unexpected;  // found but not expected
  bool empty() const { return missing.empty() && unexpected.empty(); }
};
CensusDiff census_diff(const Census& expected, const Census& found);

// Embedded expected censuses, keyed by catalog id.
struct ExpectedCensus {
  std::string catalog_id;
  std::string description;
  Census fibers;
};
const std::vector<ExpectedCensus>& expected_censuses();
const ExpectedCensus* find_expected_census(const std::string& catalog_id);

}  // namespace ksand
