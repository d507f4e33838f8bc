#include <doctest.h>

#include "ksand/maps/maps.hpp"
#include "ksand/moduli.hpp"
#include "ksand/surfaces/catalog.hpp"
#include "ksand/surfaces/degeneration.hpp"
#include "ksand/surfaces/kodaira.hpp"
#include "ksand/surfaces/mirror.hpp"
#include "support.hpp"

using namespace ksand;
using R = Rational;

namespace {

std::vector<R> generic_params(const CatalogEntry& e, Rng& rng) {
  std::vector<R> p;
  for (std::size_t i = 0; i < e.parameters.size(); ++i) p.push_back(test::random_rational(rng, 100000, 1000));
  return p;
}

bool same(const WeierstrassSurface& a, const WeierstrassSurface& b) {
  return a.a2 == b.a2 && a.a4 == b.a4 && a.a6 == b.a6;
}

}  // namespace

TEST_CASE("catalog constructs every entry at generic moduli") {
  Rng rng(21);
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.id);
    std::vector<R> p;
    if (e.id == "LEGENDRE18") p = {R(2), R(8)};
    else if (e.id == "LEGENDRE19") p = {R(5, 3)};
    else if (e.id == "QUARTIC") {
      auto k = kummer_quartic_params({2, 3, 7});
      p = {k.A, k.B, k.C, k.D};
    } else p = generic_params(e, rng);
    SurfaceModel m = catalog(e.id, p);
    if (auto* w = std::get_if<WeierstrassSurface>(&m)) {
      CHECK(e.kind == "weierstrass");
      CHECK(w->within_k3_bounds());
    }
    CHECK_THROWS_AS(catalog(e.id, std::vector<R>(p.size() + 1, R(3))), std::invalid_argument);
  }
  CHECK_THROWS_AS(catalog("NOT_AN_ID", {}), std::invalid_argument);
  CHECK_THROWS_AS(catalog("LEGENDRE18", {R(2), R(3)}), DegenerateInput);
  CHECK_THROWS_AS(catalog("QUARTIC", {R(1), R(1), R(1), R(1)}), DegenerateInput);
}

TEST_CASE("Kodaira table") {
  CHECK(kodaira_from_orders({0, 0, 0}).str() == "smooth");
  CHECK(kodaira_from_orders({0, 0, 8}).str() == "I8");
  CHECK(kodaira_from_orders({2, 3, 10}).str() == "I4*");
  CHECK(kodaira_from_orders({2, 3, 6}).str() == "I0*");
  CHECK(kodaira_from_orders({3, 3, 6}).str() == "I0*");
  CHECK(kodaira_from_orders({1, 1, 2}).str() == "II");
  CHECK(kodaira_from_orders({1, 2, 3}).str() == "III");
  CHECK(kodaira_from_orders({2, 2, 4}).str() == "IV");
  CHECK(kodaira_from_orders({3, 4, 8}).str() == "IV*");
  CHECK(kodaira_from_orders({3, 5, 9}).str() == "III*");
  CHECK(kodaira_from_orders({4, 5, 10}).str() == "II*");
  // Non-minimal orders are reduced first.
  CHECK(kodaira_from_orders({4, 6, 20}).str() == "I8");
  CHECK(KodairaType::parse("I4*").euler_number() == 10);
  CHECK(KodairaType::parse("I8").euler_number() == 8);
  CHECK(KodairaType::parse("II*").euler_number() == 10);
  CHECK(KodairaType::parse("III").euler_number() == 3);
  CHECK_THROWS(KodairaType::parse("I-1"));
}

TEST_CASE("Kodaira classification at a place") {
  auto j1 = catalog_weierstrass("J1", {R(2), R(3)});
  CHECK(kodaira_classify(j1, R(0)).str() == "I8");
  CHECK(kodaira_classify(j1, std::nullopt).str() == "I8");
  CHECK(kodaira_classify(j1, R(5)).str() == "smooth");
}

TEST_CASE("mirror torsion section") {
  for (R lam : {R(2), R(5, 2), R(-7, 3)}) {
    CHECK(mirror_section_residual(lam).zero());
    CHECK_FALSE(mirror_section_residual(lam, true).zero());
  }
}

TEST_CASE("mirror substitution into the cubic family") {
  PrimeFieldCtx ctx(65537);
  auto rep = narumiya_shiga_substitution_check(R(3), ctx, 200, 5);
  CHECK(rep.ok());
  CHECK(rep.passes + rep.excluded == 200);
  CHECK_THROWS(narumiya_shiga_substitution_check(R(3), PrimeFieldCtx(2147483647ull), 10, 5));
}

TEST_CASE("sampled points lie on their surfaces") {
  PrimeFieldCtx ctx(1000003);
  FpField F(ctx);
  Rng rng(22);
  for (const char* id : {"J1", "Y_RANK18", "J7", "S_PRIME_17", "Y_PRIME_17"}) {
    auto s = catalog_weierstrass(id, catalog_entry(id).parameters.size() == 2 ? std::vector<R>{R(2), R(3)}
                                                                               : std::vector<R>{R(7), R(3), R(-5)});
    for (int k = 0; k < 20; ++k) CHECK(is_on_surface(s, F, sample_point(s, ctx, rng)));
  }
  auto cover = catalog_double_cover("SHIODA_SEXTIC", {R(2), R(3), R(6)});
  for (int k = 0; k < 20; ++k) CHECK(is_on_surface(cover, F, sample_point(cover, ctx, rng)));
  CHECK_THROWS_AS(sample_point(catalog_weierstrass("J1", {R(1, 3), R(3)}), PrimeFieldCtx(3), rng), BadReduction);
}

TEST_CASE("fiberwise translation quotients") {
  Rng rng(23);
  for (int k = 0; k < 10; ++k) {
    std::vector<R> p2{test::random_rational(rng), test::random_rational(rng)};
    std::vector<R> p3{test::random_rational(rng), test::random_rational(rng), test::random_rational(rng)};
    CHECK(same(vgs_quotient(catalog_weierstrass("Y_RANK18", p2)), catalog_weierstrass("S_PRIME_RANK18", p2)));
    CHECK(same(vgs_quotient(catalog_weierstrass("J7", p2)), catalog_weierstrass("Y_PRIME_RANK18", p2)));
    CHECK_FALSE(same(vgs_quotient(catalog_weierstrass("J7", p2)), catalog_weierstrass("Y_PRIME_RANK18_PRINTED", p2)));
    CHECK(same(vgs_quotient(catalog_weierstrass("Y_17", p3)), catalog_weierstrass("S_PRIME_17", p3)));
    CHECK(same(vgs_quotient(catalog_weierstrass("S_17_B", p3)), catalog_weierstrass("Y_PRIME_17", p3)));
    // Quotienting back lands on the partner up to (a2, a4) -> (a2 / 4, a4 / 16).
    auto back = vgs_quotient(catalog_weierstrass("S_PRIME_17", p3));
    auto y17 = catalog_weierstrass("Y_17", p3);
    CHECK(back.a2 == y17.a2.scaled(R(1, 4)));
    CHECK(back.a4 == y17.a4.scaled(R(1, 16)));
  }
}

TEST_CASE("rank-17 fibrations degenerate to their rank-18 partners") {
  const std::pair<const char*, const char*> pairs[] = {
      {"S_17_A", "J1"}, {"Y_17", "Y_RANK18"}, {"S_17_B", "J7"}, {"S_PRIME_17", "S_PRIME_RANK18"},
      {"Y_PRIME_17", "Y_PRIME_RANK18"}};
  Rng rng(24);
  for (int k = 0; k < 5; ++k) {
    R k1 = test::random_rational(rng, 50, 20), k2 = test::random_rational(rng, 50, 20);
    if (k1 == R(-1) || k2 == R(1) || k2 == R(-1)) continue;
    for (auto [from, to] : pairs) {
      CAPTURE(from);
      CHECK(same(rank17_degeneration_limit(from, k1, k2), catalog_weierstrass(to, {k1 * k1, k2 * k2})));
    }
    CHECK_FALSE(same(rank17_degeneration_limit("Y_PRIME_17", k1, k2),
                     catalog_weierstrass("Y_PRIME_RANK18_PRINTED", {k1 * k1, k2 * k2})));
  }
  CHECK_THROWS_AS(rank17_degeneration_limit("S_17_A", R(2), R(1)), DegenerateInput);
}

TEST_CASE("quartic and cubic membership") {
  auto k = kummer_quartic_params({2, 3, 7});
  auto q = std::get<QuarticSurface>(catalog("QUARTIC", {k.A, k.B, k.C, k.D}));
  CHECK(q.xi == std::array<R, 5>{R(1), R(-6), R(-8), R(-5), R(38)});
  RationalField Q;
  // The origin of the affine chart X0 = 0 hits the quartic only through the other terms.
  CHECK(is_on_quartic(q, Q, {R(0), R(0), R(0), R(0)}));
  CHECK_FALSE(is_on_quartic(q, Q, {R(1), R(0), R(0), R(0)}));
  auto m = std::get<MirrorCubic>(catalog("MIRROR_CUBIC", {R(2)}));
  CHECK(m.mu == R(1, 16));
  CHECK(mirror_cubic_residual(m, Q, R(1), R(1), R(-3)) == R(1, 4096));
  auto e = std::get<EllipticCurveModel>(catalog("ELLIPTIC_E", {R(1, 4)}));
  CHECK(is_on_curve(e, Q, R(0), R(0)));
  CHECK(is_on_curve(e, Q, R(1), R(0)));
}
