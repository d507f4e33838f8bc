#include <doctest.h>

#include <cmath>

#include "ksand/periods/periods.hpp"

using namespace ksand;

TEST_CASE("series basics") {
  CHECK(hyp2f1({0.5, 0.5, 1.0, 0.0, 1e-15}) == std::complex<double>(1.0, 0.0));
  CHECK(std::abs(hyp2f1({1, 1, 2, 0.5, 1e-15}).real() - 2 * std::log(2.0)) < 1e-12);
  CHECK_THROWS_AS(hyp2f1({1, 1, 2, 0.96, 1e-15}), std::domain_error);
  CHECK_THROWS_AS(hyp2f1({1, 1, -2, 0.5, 1e-15}), std::domain_error);
  CHECK_THROWS_AS(hyp2f1({1, 1, 2, 0.5, 1e-17}), std::domain_error);
}

TEST_CASE("logarithm closed form at 20 points") {
  for (int k = 1; k <= 20; ++k) {
    double z = -0.95 + 1.9 * k / 21.0;
    double expect = -std::log1p(-z) / z;
    CHECK(std::abs(hyp2f1({1, 1, 2, z, 1e-15}).real() - expect) < 1e-12);
  }
  std::complex<double> z(0.3, 0.4);
  auto expect = -std::log(1.0 - z) / z;
  CHECK(std::abs(hyp2f1({1, 1, 2, z, 1e-15}) - expect) < 1e-12);
}

TEST_CASE("series value is stable under a tighter tolerance") {
  auto a = hyp2f1({0.125, 0.375, 1, 0.1, 1e-13}).real();
  auto b = hyp2f1({0.125, 0.375, 1, 0.1, 1e-15}).real();
  CHECK(std::abs(a - b) < 1e-12);
}

TEST_CASE("quadratic transformation and the holomorphic period") {
  for (double lam : {2.0, 2.5, 3.0, 10.0}) {
    CHECK(quadratic_transformation_check(0.125, 0.375, lam, 1e-10).ok);
    CHECK(quadratic_transformation_check(0.25, 0.75, lam, 1e-10).ok);
    CHECK(quadratic_transformation_check(0.25, 0.25, lam, 1e-10).ok);
    CHECK(holomorphic_period_check(lam, 1e-10).ok);
  }
  // Large lambda sends both arguments to 0.
  auto far = holomorphic_period_check(1e4, 1e-12);
  CHECK(std::abs(far.lhs - 1) < 1e-12);
  CHECK(far.ok);
  // The transformation holds for any (p, q), so both sides differ from a shifted argument.
  CHECK(quadratic_transformation_check(1.0 / 3, 1.0 / 6, 2.0, 1e-10).ok);
  auto shifted = quadratic_transformation_check(0.125, 0.375, 1.5, 1e-10);
  CHECK(std::abs(shifted.lhs - quadratic_transformation_check(0.125, 0.375, 2.0, 1e-10).lhs) > 1e-3);
  CHECK_THROWS_AS(holomorphic_period_check(0.5, 1e-10), std::domain_error);
  CHECK(period_argument(2.0) > 0);
}
