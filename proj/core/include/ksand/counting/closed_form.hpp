#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksand/arith/prime_field.hpp"

namespace ksand {

enum class Kernel { Naive, Convolution, Ntt };

std::string kernel_name(Kernel k);
Kernel parse_kernel(const std::string& name);

// Closed form for sum chi(-(x^2 - 4)(x - w)(w - a)(w - b)(w - c)) mod p, as a
// sum over binomial coefficients C(m, k), m = (p - 1)/2.
std::uint64_t closed_form_count(std::uint64_t a, std::uint64_t b, std::uint64_t c, const PrimeFieldCtx& ctx,
                                Kernel kernel = Kernel::Convolution);

// Convolutions used by the fast kernels, exposed for tests and benchmarks.
std::vector<std::uint64_t> convolve_mod_p(const std::vector<std::uint64_t>& u, const std::vector<std::uint64_t>& v,
                                          const PrimeFieldCtx& ctx);
// Exact integer convolution via three NTT primes and CRT, then reduced mod p.
// Requires inputs in [0, p) with p < 2^20.
std::vector<std::uint64_t> convolve_ntt_mod_p(const std::vector<std::uint64_t>& u,
                                              const std::vector<std::uint64_t>& v, const PrimeFieldCtx& ctx);

}  // namespace ksand
