#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksand/surfaces/catalog.hpp"
#include "ksand/surfaces/sampling.hpp"

namespace ksand {

enum class MapFormula {
  Psi,             // (t, x, y) -> (t^2, t^2 x, t^3 y)
  Phi,             // (u, X, Y) -> (u + 1/u, (u^2-1)^2/u^4 X, (u^2-1)^3/u^6 Y)
  Iota,            // (t, x, y) -> (-t, x, -y)
  JInvolution,     // (t, x, y) -> (1/t, x/t^4, -y/t^6)
  VgsTranslation,  // (X, Y) -> (p1/X, -p1 Y/X^2), translation by (0, 0)
  Isogeny,         // (X, Y) -> (Y^2/(4X^2), Y(X^2 - p1)/(8X^2)), p1 of the source
  DualIsogeny,     // (x, y) -> (y^2/x^2, y(16x^2 - p2^2 + 4p1)/(16x^2)), p1, p2 of the target
  LegendreSwap,    // twisted Legendre fibration -> twisted Legendre pencil, base and fiber exchanged
};

enum class ParamFamily { Rank18, Rank17 };

struct MapDescriptor {
  std::string map_id;
  std::string source_id;
  std::string target_id;
  MapFormula formula;
  ParamFamily family;
  int degree = 1;                 // generic degree of the rational map
  Rational two_form_factor = 1;   // c in c * omega_source = map^* omega_target; metadata, never checked
  bool involution = false;
  std::string exceptional_locus;
  int identity_degree = 48;       // bound on the degree of the sampled identity in the base and fiber coordinates
};

const std::vector<MapDescriptor>& map_catalog();
const MapDescriptor& find_map(const std::string& map_id);

struct ExceptionalPoint : std::domain_error {
  using std::domain_error::domain_error;
};

// A map descriptor with its source and target surfaces instantiated at fixed moduli.
struct BoundMap {
  MapDescriptor desc;
  std::vector<Rational> params;
  SurfaceModel source;
  SurfaceModel target;
};

// target_override swaps in a different target surface, used to test competing readings.
BoundMap bind_map(const std::string& map_id, const std::vector<Rational>& params,
                  const std::optional<std::string>& target_override = std::nullopt);

template <class Field>
FiberedPoint<Field> apply_map(const BoundMap& m, const Field& F, const FiberedPoint<Field>& P);

template <class Field>
bool on_surface(const SurfaceModel& s, const Field& F, const FiberedPoint<Field>& P);

// Fiberwise doubling on a Weierstrass model; throws ExceptionalPoint at 2-torsion.
template <class Field>
FiberedPoint<Field> double_point(const WeierstrassSurface& s, const Field& F, const FiberedPoint<Field>& P);

// Model with a6 = 0: y^2 = x^3 + p2 x^2 + p1 x  ->  y^2 = x^3 - (p2/2) x^2 + ((p2^2/4 - p1)/4) x.
WeierstrassSurface vgs_quotient(const WeierstrassSurface& s);

}  // namespace ksand
