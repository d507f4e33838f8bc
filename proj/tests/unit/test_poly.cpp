#include <doctest.h>

#include "ksand/poly/roots.hpp"
#include "support.hpp"

using namespace ksand;

namespace {
UniPoly lin(const Rational& r) { return UniPoly{-r, Rational(1)}; }
}  // namespace

TEST_CASE("polynomial arithmetic") {
  UniPoly u = UniPoly::x();
  UniPoly f = (u - UniPoly(1)) * (u + UniPoly(2));
  CHECK(f.degree() == 2);
  CHECK(f.coeff(0) == Rational(-2));
  CHECK(f(Rational(1)) == Rational(0));
  CHECK(UniPoly().degree() == -1);
  auto [q, r] = divmod(f, u - UniPoly(1));
  CHECK(q == u + UniPoly(2));
  CHECK(r.zero());
  CHECK(f.derivative() == u.scaled(Rational(2)) + UniPoly(1));
  CHECK(f.compose(u + UniPoly(1)) == u * (u + UniPoly(3)));
  CHECK(gcd(f, (u - UniPoly(1)).pow(2)) == u - UniPoly(1));
  CHECK(f.str("t").find("t^2") != std::string::npos);
}

TEST_CASE("rational roots are exact and sorted") {
  UniPoly f = lin(Rational(3, 7)) * lin(Rational(-5, 2)) * lin(Rational(0)) * (UniPoly::x().pow(2) + UniPoly(1));
  auto roots = rational_roots(f.scaled(Rational(14)));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == Rational(-5, 2));
  CHECK(roots[1] == Rational(0));
  CHECK(roots[2] == Rational(3, 7));
  CHECK(rational_roots(UniPoly::x().pow(2) - UniPoly(2)).empty());
}

TEST_CASE("rational roots of random products") {
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    std::vector<Rational> rs;
    UniPoly f(Rational(1));
    for (int i = 0; i < 5; ++i) {
      rs.push_back(test::random_rational(rng, 60, 30));
      f = f * lin(rs.back());
    }
    f = f * (UniPoly::x().pow(2) + UniPoly(3));
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    CHECK(rational_roots(f) == rs);
  }
}

TEST_CASE("orders and squarefree decomposition") {
  UniPoly f = lin(Rational(2)).pow(3) * lin(Rational(-1)) * (UniPoly::x().pow(2) + UniPoly(1)).pow(2);
  CHECK(order_at(f, Rational(2)) == 3);
  CHECK(order_at(f, Rational(-1)) == 1);
  CHECK(order_at(f, Rational(5)) == 0);
  CHECK(order_at(UniPoly(), Rational(5)) == kInfiniteOrder);
  auto sq = squarefree_decomposition(f.scaled(Rational(-3)));
  REQUIRE(sq.size() == 3);
  CHECK(sq[0].second == 1);
  CHECK(sq[0].first == lin(Rational(-1)));
  CHECK(sq[1].second == 2);
  CHECK(sq[1].first == UniPoly::x().pow(2) + UniPoly(1));
  CHECK(sq[2].second == 3);
  CHECK(deflate(f, Rational(-1)) * lin(Rational(-1)) == f);
}

TEST_CASE("primitive part") {
  UniPoly f{Rational(-1, 2), Rational(0), Rational(3, 4)};
  UniPoly g = primitive_part(f);
  CHECK(g == UniPoly{Rational(-2), Rational(0), Rational(3)});
}

TEST_CASE("bivariate evaluation over F_p") {
  PrimeFieldCtx ctx(11);
  FpField F(ctx);
  BiPoly f = bipoly_x() * bipoly_x() - as_bipoly_in_w(UniPoly::x());
  CHECK(eval_in(f, F, F.from_u64(3), F.from_u64(9)).is_zero());
  CHECK(eval_in(f, F, F.from_u64(3), F.from_u64(8)).value() == 1);
}
