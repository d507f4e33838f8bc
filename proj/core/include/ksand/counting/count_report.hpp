#pragma once

#include <cstdint>

#include "ksand/arith/prime_field.hpp"

namespace ksand {

// One row of the closed form vs character sum comparison for the pencil
// y^2 = -(x^2 - 4)(x - w)(w - a)(w - b)(w - c).
struct CountRow {
  std::uint64_t p = 0;
  std::uint64_t a = 0, b = 0, c = 0;
  std::uint64_t closed_form = 0;        // convolution kernel
  std::uint64_t closed_form_naive = 0;  // naive kernel
  std::uint64_t character_sum = 0;
  bool agree = false;                   // all three equal
  long long t_naive_ns = 0;             // zero unless timed
  long long t_conv_ns = 0;
};

CountRow count_row(std::uint64_t a, std::uint64_t b, std::uint64_t c, const PrimeFieldCtx& ctx, bool timed = false,
                   int threads = 1);

}  // namespace ksand
