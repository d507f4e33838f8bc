#include "ksand/counting/relations.hpp"

#include <sstream>

#include "ksand/counting/counting.hpp"
#include "ksand/surfaces/catalog.hpp"

namespace ksand {

namespace {

// Reason p is a bad prime for these moduli, or empty.
std::string bad_reduction_reason(const std::array<Rational, 3>& v, const char* name, std::uint64_t p) {
  std::vector<Rational> pts(v.begin(), v.end());
  pts.emplace_back(2);
  pts.emplace_back(-2);
  const mpz_class P(static_cast<unsigned long>(p));
  for (const auto& q : pts)
    if (q.den() % P == 0) return std::string("p divides a denominator of ") + name;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) continue;
      Rational d = pts[i] - pts[j];
      if (d.num() % P == 0) {
        std::ostringstream os;
        os << "collision mod p among " << name << " and +-2";
        return os.str();
      }
    }
  return {};
}

std::vector<Rational> as_vec(const std::array<Rational, 3>& a) { return {a[0], a[1], a[2]}; }

}  // namespace

RelationReport count_relation_check(const RosenhainModuli& lambda, const std::vector<std::uint64_t>& primes, int sign,
                                    int threads) {
  RelationReport rep;
  rep.lambda = lambda;
  LevelTwoModuli L = level_two_from_rosenhain(lambda, sign);
  if (!L.is_rational()) throw DegenerateInput("relation check needs l1 l2 l3 to be a rational square");
  rep.L = L.rational();
  rep.Lp = richelot_transform(L).rational();
  auto nu = twist_factor(L.L).nu.as_rational();
  if (!nu) throw DegenerateInput("twist factor nu is irrational");
  rep.nu = *nu;
  if (rep.nu.is_zero()) throw DegenerateInput("twist factor nu vanishes");

  const auto y1_cover = catalog_double_cover("LEGENDRE17_TILDE", as_vec(rep.L));
  const auto y2_cover = catalog_double_cover("LEGENDRE17", as_vec(rep.Lp));
  const auto z_cover = catalog_double_cover("LEGENDRE17", as_vec(rep.L));
  const auto sa_cover = weierstrass_as_cover(catalog_weierstrass("Y_17", as_vec(rep.Lp)));
  const auto sb_cover = weierstrass_as_cover(catalog_weierstrass("S_PRIME_17", as_vec(rep.Lp)));

  bool all_a = true, all_b = true, all_rel2 = true, alt_s = true, alt_y = true;
  int tested = 0;
  for (std::uint64_t p : primes) {
    RelationRow row;
    row.p = p;
    if (p < 3 || !is_prime_u64(p)) {
      row.excluded = "not an odd prime";
      rep.rows.push_back(row);
      continue;
    }
    row.excluded = bad_reduction_reason(rep.L, "L", p);
    if (row.excluded.empty()) row.excluded = bad_reduction_reason(rep.Lp, "L'", p);
    if (row.excluded.empty() && mpz_class(rep.nu.num() % mpz_class(static_cast<unsigned long>(p))) == 0)
      row.excluded = "nu vanishes mod p";
    if (!row.excluded.empty()) {
      rep.rows.push_back(row);
      continue;
    }
    PrimeFieldCtx ctx(p);
    try {
      row.nu = ctx.reduce(rep.nu);
      row.chi_nu = legendre_symbol(row.nu, ctx);
      row.y1 = character_sum_count(y1_cover, ctx, threads);
      row.y2 = character_sum_count(y2_cover, ctx, threads);
      row.z = character_sum_count(z_cover, ctx, threads);
      row.s_a = character_sum_count(sa_cover, ctx, threads);
      row.s_b = character_sum_count(sb_cover, ctx, threads);
    } catch (const BadReduction&) {
      row = RelationRow{};
      row.p = p;
      row.excluded = "p divides a fibration coefficient denominator";
      rep.rows.push_back(row);
      continue;
    }
    const std::uint64_t two_y1 = ctx.mul(2, row.y1);
    row.rel1_a = row.s_a == two_y1;
    row.rel1_b = row.s_b == two_y1;
    if (auto r = sqrt_mod_p(row.nu, ctx)) {
      row.rel2_plus = row.y2 == ctx.mul(*r, row.y1);
      row.rel2_minus = row.y2 == ctx.mul(ctx.neg(*r), row.y1);
      ++rep.residue_primes;
      all_rel2 = all_rel2 && (*row.rel2_plus || *row.rel2_minus);
    }
    const std::uint64_t y2m1 = ctx.sub(row.y2, 1);
    row.s_a_is_y2_minus_1 = row.s_a == y2m1;
    row.s_b_is_y2_minus_1 = row.s_b == y2m1;
    row.y2_is_y1_plus_1_minus_chi = row.y2 == ctx.sub(ctx.add(row.y1, 1), ctx.from_int(row.chi_nu));
    all_a = all_a && row.rel1_a;
    all_b = all_b && row.rel1_b;
    alt_s = alt_s && row.s_a_is_y2_minus_1 && row.s_b_is_y2_minus_1;
    alt_y = alt_y && row.y2_is_y1_plus_1_minus_chi;
    ++tested;
    rep.rows.push_back(row);
  }
  rep.rel1_uniform_a = tested > 0 && all_a;
  rep.rel1_uniform_b = tested > 0 && all_b;
  rep.rel2_all_residue_primes = rep.residue_primes > 0 && all_rel2;
  if (rep.rel1_uniform_a && rep.rel1_uniform_b)
    rep.consistent_designation = "both";
  else if (rep.rel1_uniform_a)
    rep.consistent_designation = "Y_17";
  else if (rep.rel1_uniform_b)
    rep.consistent_designation = "S_PRIME_17";
  else
    rep.consistent_designation = "none";
  rep.alt_s_equals_y2_minus_1 = tested > 0 && alt_s;
  rep.alt_y2_equals_y1_plus_1_minus_chi = tested > 0 && alt_y;
  return rep;
}

}  // namespace ksand
