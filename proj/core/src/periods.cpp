#include "ksand/periods/periods.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ksand {

std::complex<double> hyp2f1(const HypParams& h) {
  if (std::abs(h.z) > kSeriesRadius) throw std::domain_error("|z| exceeds the series radius 0.95");
  if (h.c <= 0 && std::floor(h.c) == h.c) throw std::domain_error("c is a non-positive integer");
  if (!(h.tol >= 1e-15)) throw std::domain_error("tolerance below 1e-15");
  std::complex<double> sum = 1, term = 1;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    term *= (h.a + n) * (h.b + n) / ((h.c + n) * (n + 1.0)) * h.z;
    sum += term;
    if (std::abs(term) < h.tol * std::abs(sum)) return sum;
    if (term == 0.0) return sum;
  }
  throw ConvergenceError("2F1 series did not converge in " + std::to_string(kMaxSeriesTerms) + " terms");
}

double period_argument(double lambda) { return 0.5 * (1.0 - std::sqrt(1.0 - 1.0 / std::pow(lambda, 4))); }

namespace {

PeriodReport compare(double lambda, double lhs, double rhs, double tol) {
  PeriodReport r;
  r.lambda = lambda;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_diff = std::abs(lhs - rhs);
  r.tol = tol;
  r.ok = r.abs_diff <= tol * std::max(1.0, std::abs(lhs));
  return r;
}

void check_lambda(double lambda) {
  if (!(lambda > 1)) throw std::domain_error("lambda must exceed 1");
}

}  // namespace

PeriodReport quadratic_transformation_check(double p, double q, double lambda, double tol) {
  check_lambda(lambda);
  const double c = p + q + 0.5;
  const double mu = 1.0 / std::pow(lambda, 4);
  double lhs = hyp2f1({p, q, c, mu, 1e-15}).real();
  double rhs = hyp2f1({2 * p, 2 * q, c, period_argument(lambda), 1e-15}).real();
  return compare(lambda, lhs, rhs, tol);
}

PeriodReport holomorphic_period_check(double lambda, double tol) {
  check_lambda(lambda);
  const double mu = 1.0 / std::pow(lambda, 4);
  double f = hyp2f1({0.25, 0.75, 1.0, period_argument(lambda), 1e-15}).real();
  double g = hyp2f1({0.125, 0.375, 1.0, mu, 1e-15}).real();
  return compare(lambda, f * f, g * g, tol);
}

}  // namespace ksand
