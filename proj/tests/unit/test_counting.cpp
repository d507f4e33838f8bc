#include <doctest.h>

#include <cmath>

#include "ksand/counting/closed_form.hpp"
#include "ksand/counting/count_report.hpp"
#include "ksand/counting/counting.hpp"
#include "ksand/counting/jacobian.hpp"
#include "ksand/counting/relations.hpp"
#include "ksand/surfaces/catalog.hpp"
#include "support.hpp"

using namespace ksand;
using R = Rational;

namespace {

AffineDoubleCover pencil(const R& a, const R& b, const R& c) { return catalog_double_cover("LEGENDRE17", {a, b, c}); }

AffineDoubleCover constant_cover(long v) {
  AffineDoubleCover c;
  c.f = BiPoly(UniPoly(R(v)));
  return c;
}

// Literal sum of f^((p-1)/2) over F_p^2.
std::uint64_t power_sum(const AffineDoubleCover& cover, const PrimeFieldCtx& ctx) {
  FpField F(ctx);
  std::uint64_t s = 0;
  for (std::uint64_t x = 0; x < ctx.p(); ++x)
    for (std::uint64_t w = 0; w < ctx.p(); ++w)
      s = ctx.add(s, fp_pow(eval_in(cover.f, F, F.from_u64(x), F.from_u64(w)).value(), (ctx.p() - 1) / 2, ctx));
  return s;
}

}  // namespace

TEST_CASE("character sum oracles over F_3") {
  PrimeFieldCtx ctx(3);
  // -(x^2 - 4)(x - w)(w - 1)^3
  BiPoly X = bipoly_x();
  BiPoly W = as_bipoly_in_w(UniPoly::x());
  BiPoly one = as_bipoly_in_w(UniPoly(R(1)));
  AffineDoubleCover cube;
  cube.f = -((X * X - as_bipoly_in_w(UniPoly(R(4)))) * (X - W) * (W - one) * (W - one) * (W - one));
  CHECK(character_sum_count(cube, ctx) == 1);
  CHECK(character_sum_count(pencil(1, 2, 0), ctx) == closed_form_count(1, 2, 0, ctx));
}

TEST_CASE("character sum matches the literal power sum") {
  Rng rng(41);
  for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 29ull}) {
    PrimeFieldCtx ctx(p);
    for (int k = 0; k < 5; ++k) {
      auto cover = pencil(test::random_rational(rng, 20, 1), test::random_rational(rng, 20, 1),
                          test::random_rational(rng, 20, 1));
      CHECK(character_sum_count(cover, ctx) == power_sum(cover, ctx));
    }
  }
}

TEST_CASE("thread count does not change the character sum") {
  PrimeFieldCtx ctx(101);
  auto cover = pencil(R(5), R(-7, 3), R(11));
  long long one = character_sum(cover, ctx, 1);
  CHECK(character_sum(cover, ctx, 3) == one);
  CHECK(character_sum(cover, ctx, 8) == one);
}

TEST_CASE("squares and constants") {
  PrimeFieldCtx ctx(7);
  // f = g^2 with g = x - w: the sum counts the points with g != 0.
  AffineDoubleCover sq;
  BiPoly g = bipoly_x() - as_bipoly_in_w(UniPoly::x());
  sq.f = g * g;
  CHECK(character_sum(sq, ctx) == 7 * 7 - 7);
  auto c1 = affine_point_count(constant_cover(1), ctx);
  CHECK(c1.total == 2 * 49);
  CHECK(c1.consistent());
  auto c3 = affine_point_count(constant_cover(3), ctx);
  CHECK(c3.total == 0);
  CHECK(c3.consistent());
}

TEST_CASE("affine count matches the triple loop") {
  PrimeFieldCtx ctx(5);
  auto cover = pencil(R(1), R(3), R(-1));
  auto c = affine_point_count(cover, ctx);
  CHECK(c.consistent());
  CHECK(c.chi_sum == character_sum(cover, ctx));
  FpField F(ctx);
  long long total = 0;
  for (std::uint64_t x = 0; x < 5; ++x)
    for (std::uint64_t w = 0; w < 5; ++w)
      for (std::uint64_t y = 0; y < 5; ++y)
        total += is_on_surface(cover, F, FiberedPoint<FpField>{F.from_u64(w), F.from_u64(x), F.from_u64(y)});
  CHECK(c.total == total);
}

TEST_CASE("closed form hand anchors") {
  PrimeFieldCtx ctx(3);
  for (auto k : {Kernel::Naive, Kernel::Convolution, Kernel::Ntt}) {
    CHECK(closed_form_count(1, 1, 1, ctx, k) == 1);
    CHECK(closed_form_count(1, 2, 0, ctx, k) == 0);
  }
}

TEST_CASE("closed form equals the character sum on every kernel") {
  Rng rng(42);
  for (std::uint64_t p = 3; p <= 61; p += 2) {
    if (!is_prime_u64(p)) continue;
    PrimeFieldCtx ctx(p);
    for (int k = 0; k < 5; ++k) {
      std::uint64_t a = uniform_below(rng, p), b = uniform_below(rng, p), c = uniform_below(rng, p);
      auto row = count_row(a, b, c, ctx);
      CHECK(row.agree);
      CHECK(closed_form_count(a, b, c, ctx, Kernel::Ntt) == row.closed_form);
    }
    CHECK(closed_form_count(0, 0, 0, ctx) == character_sum_count(pencil(0, 0, 0), ctx));
  }
}

TEST_CASE("NTT convolution equals schoolbook convolution") {
  Rng rng(43);
  for (std::uint64_t p : {3ull, 101ull, 10007ull, 1048573ull}) {
    PrimeFieldCtx ctx(p);
    for (std::size_t n : {1u, 2u, 17u, 300u}) {
      std::vector<std::uint64_t> u(n), v(n + 3);
      for (auto& x : u) x = uniform_below(rng, p);
      for (auto& x : v) x = p - 1;
      CHECK(convolve_ntt_mod_p(u, v, ctx) == convolve_mod_p(u, v, ctx));
    }
  }
  CHECK_THROWS(convolve_ntt_mod_p({1}, {1}, PrimeFieldCtx(1048583ull)));
}

TEST_CASE("untimed count rows have zero timing columns") {
  PrimeFieldCtx ctx(11);
  auto row = count_row(1, 2, 3, ctx);
  CHECK(row.t_naive_ns == 0);
  CHECK(row.t_conv_ns == 0);
  CHECK(kernel_name(parse_kernel("ntt")) == "ntt");
  CHECK_THROWS(parse_kernel("fft"));
}

TEST_CASE("Jacobian orders") {
  PrimeFieldCtx c7(7);
  auto r = jacobian_order({0, 6, 0, 0, 0, 1}, c7);  // x^5 - x
  CHECK(r.parity_ok);
  CHECK(r.weil_ok);
  CHECK(r.n1 == 8);
  CHECK(r.n2 == 78);
  CHECK(r.jac_order == 64);
  PrimeFieldCtx c5(5);
  // x(x-1)(x-2)(x-3)(x-4) = x^5 - x over F_5 is squarefree.
  auto r5 = jacobian_order({0, 4, 0, 0, 0, 1}, c5);
  CHECK(r5.n1 == 6);
  CHECK(r5.parity_ok);
  CHECK(r5.weil_ok);
  CHECK_THROWS_AS(jacobian_order({0, 0, 1, 0, 0, 1}, c7), std::invalid_argument);
  CHECK_THROWS_AS(jacobian_order({1, 0, 1}, c7), std::invalid_argument);
  CHECK(gcd_with_derivative_degree({1, 2, 1}, c7) == 1);
}

TEST_CASE("Jacobian orders lie in the Weil interval") {
  Rng rng(44);
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 17ull}) {
    PrimeFieldCtx ctx(p);
    for (int k = 0; k < 20; ++k) {
      std::vector<std::uint64_t> f(7);
      for (auto& c : f) c = uniform_below(rng, p);
      if (f.back() == 0 || gcd_with_derivative_degree(f, ctx) != 0) continue;
      auto r = jacobian_order(f, ctx);
      CHECK(r.parity_ok);
      CHECK(r.weil_ok);
      // N1 and N2 stay inside the genus-two Hasse-Weil bounds.
      CHECK(std::abs(static_cast<double>(r.n1) - (p + 1.0)) <= 4 * std::sqrt(double(p)) + 1e-9);
    }
  }
}

TEST_CASE("relation check report") {
  std::vector<std::uint64_t> primes{3, 5, 7, 11, 13, 17};
  auto rep = count_relation_check({2, 3, 6}, primes);
  CHECK(rep.nu == R(10));
  CHECK(rep.L == std::array<R, 3>{R(10, 3), R(5, 2), R(2)});
  CHECK(rep.Lp == std::array<R, 3>{R(26, 3), R(7), R(2)});
  REQUIRE(rep.rows.size() == primes.size());
  CHECK_FALSE(rep.rows[0].excluded.empty());
  CHECK_FALSE(rep.rows[1].excluded.empty());
  const auto& r11 = rep.rows[3];
  CHECK(r11.excluded.empty());
  CHECK(r11.chi_nu == -1);
  CHECK_FALSE(r11.rel2_plus.has_value());
  const auto& r13 = rep.rows[4];
  CHECK(r13.chi_nu == 1);
  CHECK(r13.rel2_plus.has_value());
  // Frozen values of the three sums at p = 11.
  CHECK(r11.y1 == 9);
  CHECK(r11.y2 == 0);
  CHECK(r11.s_a == 10);
  CHECK(r11.s_b == 10);
  CHECK_THROWS_AS(count_relation_check({2, 3, 7}, primes), DegenerateInput);
}

TEST_CASE("relations observed in the data") {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 3; p < 50; p += 2)
    if (is_prime_u64(p)) primes.push_back(p);
  for (RosenhainModuli lam : {RosenhainModuli{2, 3, 6}, RosenhainModuli{3, 5, 15}, RosenhainModuli{R(1, 2), 4, 8}}) {
    auto rep = count_relation_check(lam, primes);
    CHECK(rep.alt_s_equals_y2_minus_1);
    CHECK(rep.alt_y2_equals_y1_plus_1_minus_chi);
  }
}
