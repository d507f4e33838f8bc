#pragma once

#include <cstdint>
#include <vector>

#include "ksand/arith/prime_field.hpp"

namespace ksand {

struct JacobianReport {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> coeffs;  // ascending, reduced mod p
  long long n1 = 0;                   // #C(F_p), including points at infinity
  long long n2 = 0;                   // #C(F_{p^2})
  long long jac_order = 0;            // (n1^2 + n2)/2 - p
  bool parity_ok = false;             // n1^2 + n2 even
  bool weil_ok = false;               // (sqrt p - 1)^4 <= #J <= (sqrt p + 1)^4
};

// y^2 = f(x) with f squarefree of degree 5 or 6 mod p. Points at infinity:
// one for degree 5; for degree 6, 1 + chi(lc) over F_p and 2 over F_{p^2}.
// F_{p^2} = F_p[s]/(s^2 - n) with n the smallest non-residue.
JacobianReport jacobian_order(const std::vector<std::uint64_t>& coeffs, const PrimeFieldCtx& ctx);

// Degree of gcd(f, f') over F_p; 0 means squarefree.
int gcd_with_derivative_degree(const std::vector<std::uint64_t>& coeffs, const PrimeFieldCtx& ctx);

}  // namespace ksand
