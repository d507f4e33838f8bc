#pragma once

#include <cstdint>
#include <random>

#include "ksand/arith/rational.hpp"
#include "ksand/surfaces/sampling.hpp"

namespace ksand::test {

// Random nonzero rational n/d with |n| <= num_bound, 1 <= d <= den_bound.
inline Rational random_rational(Rng& rng, std::uint64_t num_bound = 1000, std::uint64_t den_bound = 97) {
  for (;;) {
    long n = static_cast<long>(uniform_below(rng, 2 * num_bound + 1)) - static_cast<long>(num_bound);
    long d = static_cast<long>(uniform_below(rng, den_bound)) + 1;
    if (n != 0) return Rational(n, d);
  }
}

}  // namespace ksand::test
