#include <algorithm>
#include <sstream>

#include "ksand/poly/roots.hpp"
#include "ksand/surfaces/fibers.hpp"

namespace ksand {

namespace {

// Split squarefree q by the order of vanishing of g at its roots.
std::vector<std::pair<UniPoly, int>> split_by_order(const UniPoly& q, const UniPoly& g) {
  std::vector<std::pair<UniPoly, int>> out;
  if (q.degree() <= 0) return out;
  if (g.zero()) {
    out.emplace_back(q, kInfiniteOrder);
    return out;
  }
  UniPoly common = gcd(q, g);
  UniPoly free_part = monic(exact_div(q, common));
  if (free_part.degree() > 0) out.emplace_back(free_part, 0);
  UniPoly h = g;
  UniPoly cur = common;
  int k = 0;
  while (cur.degree() > 0) {
    h = exact_div(h, cur);
    ++k;
    UniPoly next = gcd(cur, h);
    UniPoly piece = monic(exact_div(cur, next));
    if (piece.degree() > 0) out.emplace_back(piece, k);
    cur = next;
  }
  return out;
}

}  // namespace

std::string FiberRecord::place_label(const std::string& var) const {
  switch (kind) {
    case PlaceKind::Rational: return var + " = " + value->str();
    case PlaceKind::Infinity: return var + " = inf";
    case PlaceKind::Factor: return factor.str(var) + " = 0";
  }
  return "?";
}

Census FiberSummary::census() const {
  Census c;
  for (const auto& f : fibers)
    if (f.type.symbol != KodairaSymbol::Smooth) c[f.type.str()] += f.count;
  return c;
}

FiberSummary singular_fiber_summary(const WeierstrassSurface& s) {
  if (!s.within_k3_bounds()) throw std::domain_error(s.catalog_id + ": coefficients exceed the K3 degree bounds");
  Invariants inv = c4_c6_delta(s);
  FiberSummary out;
  out.catalog_id = s.catalog_id;
  out.base_variable = s.base_variable;

  for (const Rational& r : rational_roots(inv.delta)) {
    FiberRecord rec;
    rec.kind = PlaceKind::Rational;
    rec.value = r;
    rec.orders = vanishing_orders(inv, r);
    rec.type = kodaira_from_orders(rec.orders);
    out.fibers.push_back(rec);
  }

  std::vector<FiberRecord> groups;
  for (auto [pm, m] : squarefree_decomposition(inv.delta)) {
    for (const Rational& r : rational_roots(pm)) pm = deflate(pm, r);
    pm = monic(pm);
    for (auto& [p4, o4] : split_by_order(pm, inv.c4)) {
      for (auto& [p6, o6] : split_by_order(p4, inv.c6)) {
        FiberRecord rec;
        rec.kind = PlaceKind::Factor;
        rec.factor = p6;
        rec.count = p6.degree();
        rec.orders = {o4, o6, m};
        rec.type = kodaira_from_orders(rec.orders);
        groups.push_back(rec);
      }
    }
  }
  std::sort(groups.begin(), groups.end(), [&](const FiberRecord& a, const FiberRecord& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.str() < b.factor.str();
  });
  out.fibers.insert(out.fibers.end(), groups.begin(), groups.end());

  FiberRecord inf;
  inf.kind = PlaceKind::Infinity;
  inf.orders = vanishing_orders(inv, std::nullopt);
  inf.type = kodaira_from_orders(inf.orders);
  if (inf.type.symbol != KodairaSymbol::Smooth) out.fibers.push_back(inf);

  for (const auto& f : out.fibers) out.euler_sum += f.type.euler_number() * f.count;
  if (out.euler_sum != 24)
    out.collisions.push_back("Euler numbers sum to " + std::to_string(out.euler_sum) +
                             " instead of 24; parameters are not generic");
  for (const auto& f : out.fibers)
    if (f.kind == PlaceKind::Factor && f.type.symbol != KodairaSymbol::In)
      out.collisions.push_back("additive fiber over irrational places " + f.place_label(s.base_variable));
  return out;
}

std::string census_str(const Census& c) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : c) {
    if (!first) os << ", ";
    first = false;
    os << k << " x" << v;
  }
  os << "}";
  return os.str();
}

CensusDiff census_diff(const Census& expected, const Census& found) {
  CensusDiff d;
  for (const auto& [k, v] : expected) {
    auto it = found.find(k);
    int have = it == found.end() ? 0 : it->second;
    if (have < v) d.missing[k] = v - have;
  }
  for (const auto& [k, v] : found) {
    auto it = expected.find(k);
    int want = it == expected.end() ? 0 : it->second;
    if (v > want) d.unexpected[k] = v - want;
  }
  return d;
}

}  // namespace ksand
