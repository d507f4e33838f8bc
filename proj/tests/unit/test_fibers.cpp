#include <doctest.h>

#include "ksand/surfaces/catalog.hpp"
#include "ksand/surfaces/fibers.hpp"
#include "support.hpp"

using namespace ksand;
using R = Rational;

namespace {

FiberSummary summary(const std::string& id, const std::vector<R>& p) {
  return singular_fiber_summary(catalog_weierstrass(id, p));
}

}  // namespace

TEST_CASE("anchored censuses") {
  auto mirror = summary("MIRROR_G2G3", {R(2)});
  CHECK(mirror.census() == Census{{"I4*", 2}, {"I1", 4}});
  CHECK(mirror.euler_sum == 24);
  auto j1 = summary("J1", {R(2), R(3)});
  CHECK(j1.census() == Census{{"I8", 2}, {"I1", 8}});
  CHECK(census_str(j1.census()) == "{I1 x8, I8 x2}");
  CHECK(j1.collisions.empty());
}

TEST_CASE("every embedded census matches at random generic moduli") {
  REQUIRE(expected_censuses().size() == 12);
  Rng rng(31);
  for (const auto& ex : expected_censuses()) {
    CAPTURE(ex.catalog_id);
    const auto& entry = catalog_entry(ex.catalog_id);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<R> p;
      for (std::size_t i = 0; i < entry.parameters.size(); ++i) p.push_back(test::random_rational(rng, 100000, 1000));
      auto s = summary(ex.catalog_id, p);
      CHECK(s.euler_sum == 24);
      CHECK(s.collisions.empty());
      CHECK(census_diff(ex.fibers, s.census()).empty());
    }
  }
}

TEST_CASE("the typeset twisted Legendre coefficient gives a different census") {
  auto s = summary("Y_PRIME_RANK18_PRINTED", {R(17, 5), R(-23, 11)});
  CHECK(s.census() == Census{{"I1*", 1}, {"I0*", 2}, {"I2", 2}, {"I1", 1}});
  CHECK(s.euler_sum == 24);
  CHECK_FALSE(census_diff(find_expected_census("Y_PRIME_RANK18")->fibers, s.census()).empty());
}

TEST_CASE("fibers at irrational places are grouped by factor") {
  auto s = summary("J1", {R(2), R(3)});
  int factor_fibers = 0;
  for (const auto& f : s.fibers)
    if (f.kind == PlaceKind::Factor) factor_fibers += f.count;
  CHECK(factor_fibers > 0);
  int total = 0;
  for (const auto& f : s.fibers) total += f.count * f.type.euler_number();
  CHECK(total == 24);
}

TEST_CASE("special moduli produce collisions") {
  // l1 = l2 merges fibers of J1 into worse ones.
  auto s = summary("J1", {R(2), R(2)});
  auto generic = summary("J1", {R(2), R(3)});
  CHECK(s.census() != generic.census());
}

TEST_CASE("census diff") {
  auto d = census_diff({{"I8", 2}, {"I1", 8}}, {{"I8", 1}, {"I1", 8}, {"I2", 1}});
  CHECK(d.missing == Census{{"I8", 1}});
  CHECK(d.unexpected == Census{{"I2", 1}});
  CHECK(census_diff({{"I1", 3}}, {{"I1", 3}}).empty());
  CHECK(find_expected_census("NOPE") == nullptr);
}
