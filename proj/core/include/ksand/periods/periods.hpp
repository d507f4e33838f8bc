#pragma once

#include <complex>
#include <stdexcept>

namespace ksand {

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HypParams {
  double a = 0, b = 0, c = 1;
  std::complex<double> z;
  double tol = 1e-15;
};

inline constexpr double kSeriesRadius = 0.95;
inline constexpr int kMaxSeriesTerms = 20000;

// Gauss series for 2F1(a, b; c; z); needs |z| <= 0.95, tol >= 1e-15 and c not a
// non-positive integer.
std::complex<double> hyp2f1(const HypParams& h);

struct PeriodReport {
  double lambda = 0;
  double lhs = 0, rhs = 0;
  double abs_diff = 0;
  double tol = 0;
  bool ok = false;
};

// A = (1 - sqrt(1 - 1/lambda^4)) / 2
double period_argument(double lambda);

// 2F1(p, q; p + q + 1/2; 1/lambda^4) against 2F1(2p, 2q; p + q + 1/2; A).
PeriodReport quadratic_transformation_check(double p, double q, double lambda, double tol);

// 2F1(1/4, 3/4; 1; A)^2 against 2F1(1/8, 3/8; 1; 1/lambda^4)^2.
PeriodReport holomorphic_period_check(double lambda, double tol);

}  // namespace ksand
