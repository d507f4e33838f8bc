#include "ksand/counting/count_report.hpp"

#include <chrono>

#include "ksand/counting/closed_form.hpp"
#include "ksand/counting/counting.hpp"
#include "ksand/surfaces/catalog.hpp"

namespace ksand {

namespace {

template <class F>
long long time_ns(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
}

}  // namespace

CountRow count_row(std::uint64_t a, std::uint64_t b, std::uint64_t c, const PrimeFieldCtx& ctx, bool timed,
                   int threads) {
  CountRow row;
  row.p = ctx.p();
  row.a = a % ctx.p();
  row.b = b % ctx.p();
  row.c = c % ctx.p();
  long long tn = time_ns([&] { row.closed_form_naive = closed_form_count(row.a, row.b, row.c, ctx, Kernel::Naive); });
  long long tc =
      time_ns([&] { row.closed_form = closed_form_count(row.a, row.b, row.c, ctx, Kernel::Convolution); });
  if (timed) {
    row.t_naive_ns = tn;
    row.t_conv_ns = tc;
  }
  auto cover = catalog_double_cover("LEGENDRE17", {Rational(static_cast<long>(row.a)),
                                                   Rational(static_cast<long>(row.b)),
                                                   Rational(static_cast<long>(row.c))});
  row.character_sum = character_sum_count(cover, ctx, threads);
  row.agree = row.closed_form == row.closed_form_naive && row.closed_form == row.character_sum;
  return row;
}

}  // namespace ksand
