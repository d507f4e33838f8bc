// Acceptance harness: one PASS/FAIL line per criterion. Exit status is 0 when
// every requested criterion passes.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ksand/counting/closed_form.hpp"
#include "ksand/counting/counting.hpp"
#include "ksand/counting/jacobian.hpp"
#include "ksand/counting/relations.hpp"
#include "ksand/maps/maps.hpp"
#include "ksand/maps/verify.hpp"
#include "ksand/moduli.hpp"
#include "ksand/periods/periods.hpp"
#include "ksand/surfaces/catalog.hpp"
#include "ksand/surfaces/degeneration.hpp"
#include "ksand/surfaces/fibers.hpp"
#include "ksand/surfaces/sampling.hpp"

using namespace ksand;
using R = Rational;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

R rnd(Rng& rng, std::uint64_t nb = 1000, std::uint64_t db = 97) {
  for (;;) {
    long n = static_cast<long>(uniform_below(rng, 2 * nb + 1)) - static_cast<long>(nb);
    long d = static_cast<long>(uniform_below(rng, db)) + 1;
    if (n != 0) return R(n, d);
  }
}

RosenhainModuli rnd_rosenhain(Rng& rng) {
  for (;;) {
    RosenhainModuli lam{rnd(rng), rnd(rng), rnd(rng)};
    try {
      validate_rosenhain(lam);
      return lam;
    } catch (const DegenerateInput&) {
    }
  }
}

bool same(const WeierstrassSurface& a, const WeierstrassSurface& b) {
  return a.a2 == b.a2 && a.a4 == b.a4 && a.a6 == b.a6;
}

Verdict c1() {
  const auto t0 = Clock::now();
  Rng rng(20240101);
  int checked = 0, bad = 0;
  std::ostringstream first;
  for (std::uint64_t p = 3; p <= 101; ++p) {
    if (!is_prime_u64(p)) continue;
    PrimeFieldCtx ctx(p);
    for (int k = 0; k < 20; ++k) {
      std::uint64_t a = uniform_below(rng, p), b = uniform_below(rng, p), c = uniform_below(rng, p);
      auto cover = catalog_double_cover("LEGENDRE17", {R(long(a)), R(long(b)), R(long(c))});
      auto s = character_sum_count(cover, ctx);
      auto n = closed_form_count(a, b, c, ctx, Kernel::Naive);
      auto v = closed_form_count(a, b, c, ctx, Kernel::Convolution);
      ++checked;
      if (n != s || v != s) {
        if (!bad++) first << " first mismatch p=" << p << " (" << a << "," << b << "," << c << ")";
      }
    }
  }
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << checked << " triples, " << bad << " mismatches, " << t << " s" << first.str();
  return {bad == 0 && t < 60, os.str()};
}

Verdict c2() {
  std::vector<std::string> fails;
  PrimeFieldCtx f3(3);
  auto count3 = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t want, const char* tag) {
    auto cover = catalog_double_cover("LEGENDRE17", {R(long(a)), R(long(b)), R(long(c))});
    if (character_sum_count(cover, f3) != want) fails.push_back(std::string(tag) + " character sum");
    for (auto k : {Kernel::Naive, Kernel::Convolution, Kernel::Ntt})
      if (closed_form_count(a, b, c, f3, k) != want) fails.push_back(std::string(tag) + " " + kernel_name(k));
  };
  count3(1, 1, 1, 1, "(1,1,1)");
  count3(1, 2, 0, 0, "(1,2,0)");
  auto k = kummer_quartic_params({2, 3, 7});
  if (!(k.A == R(6) && k.B == R(8) && k.C == R(5) && k.D == R(19))) fails.push_back("ABCD");
  if (k.D * k.D != R(361) || !k.identity_residual().is_zero()) fails.push_back("D^2");
  auto nu = twist_factor({QuadExt(R(10, 3)), QuadExt(R(5, 2)), QuadExt(R(2))});
  if (nu.nu != QuadExt(10)) fails.push_back("nu");
  std::string d = "p=3 counts, (A,B,C,D)=(6,8,5,19), D^2=361, nu=10";
  for (const auto& f : fails) d += "; failed " + f;
  return {fails.empty(), d};
}

Verdict c3() {
  Rng rng(303);
  int ok = 0, total = 0;
  std::string failed;
  for (const auto& ex : expected_censuses()) {
    ++total;
    const auto& entry = catalog_entry(ex.catalog_id);
    std::vector<R> p;
    for (std::size_t i = 0; i < entry.parameters.size(); ++i) p.push_back(rnd(rng, 100000, 1000));
    auto s = singular_fiber_summary(catalog_weierstrass(ex.catalog_id, p));
    if (s.euler_sum == 24 && s.collisions.empty() && census_diff(ex.fibers, s.census()).empty())
      ++ok;
    else
      failed += " " + ex.catalog_id + "=" + census_str(s.census());
  }
  auto m = singular_fiber_summary(catalog_weierstrass("MIRROR_G2G3", {rnd(rng, 100000, 1000)})).census();
  auto j = singular_fiber_summary(catalog_weierstrass("J1", {rnd(rng, 100000, 1000), rnd(rng, 100000, 1000)})).census();
  bool anchors = m == Census{{"I4*", 2}, {"I1", 4}} && j == Census{{"I8", 2}, {"I1", 8}};
  std::ostringstream os;
  os << ok << "/" << total << " censuses match with Euler sum 24; MIRROR_G2G3 " << census_str(m) << ", J1 "
     << census_str(j) << failed;
  return {ok == total && total > 0 && anchors, os.str()};
}

Verdict c4() {
  PrimeFieldCtx ctx(2147483647);
  auto reps = verify_all({R(7), R(3)}, {R(7), R(3), R(-5)}, ctx, 100, 44);
  int ok = 0, chains = 0;
  std::string failed;
  for (const auto& r : reps) {
    if (r.ok()) ++ok;
    else failed += " " + r.check_id;
    chains += r.kind == "chain";
  }
  std::ostringstream os;
  os << ok << "/" << reps.size() << " checks at 100/100 (" << chains << " chains)" << failed;
  return {ok == int(reps.size()) && chains >= 2, os.str()};
}

Verdict c5() {
  Rng rng(505);
  int fails = 0;
  std::string which;
  auto note = [&](bool ok, const char* name) {
    if (!ok) {
      if (which.find(name) == std::string::npos) which += std::string(" ") + name;
      ++fails;
    }
  };
  for (int i = 0; i < 100; ++i) {
    auto lam = rnd_rosenhain(rng);
    auto L = level_two_from_rosenhain(lam);
    note(richelot_transform(richelot_transform(L.L)) == L.L, "richelot");
    auto k = kummer_quartic_params(lam);
    note(k.identity_residual().is_zero(), "D^2");
    note(nodal_quartic_residual({R(1), -k.A, -k.B, -k.C, R(2) * k.D}).is_zero(), "nodal");
  }
  int recip = 0;
  while (recip < 100) {
    auto L = level_two_from_rosenhain(rnd_rosenhain(rng));
    TwistFactor a, b;
    try {
      a = twist_factor(L.L);
      b = twist_factor(richelot_transform(L.L));
    } catch (const DegenerateInput&) {
      continue;  // L on the denominator locus of nu
    }
    note(a.nu * b.nu == QuadExt(1), "nu");
    ++recip;
  }
  for (int h = 1; h <= 20; ++h) {
    auto [j1, j2] = x0_2_parametrization(R(h));
    note(x0_2_residual(j1, j2).is_zero(), "X0(2)");
  }
  int iso = 0;
  while (iso < 100) {
    R k = rnd(rng);
    if (k == R(1) || k == R(-1)) continue;
    R lp = *elliptic_two_isogeny_modulus(k * k).as_rational();
    note(two_isogeny_locus_residual(k * k, lp).residual.is_zero(), "isogeny-locus");
    ++iso;
  }
  std::string d = "Richelot^2, D^2, nodal, nu reciprocity, isogeny locus on 100 each; X0(2) for h=1..20; " +
                  std::to_string(fails) + " failures" + which;
  return {fails == 0, d};
}

Verdict c6() {
  Rng rng(606);
  int y18 = 0, y17 = 0, cons = 0, printed = 0;
  const int n = 100;
  for (int i = 0; i < n; ++i) {
    std::vector<R> p2{rnd(rng), rnd(rng)}, p3{rnd(rng), rnd(rng), rnd(rng)};
    y18 += same(vgs_quotient(catalog_weierstrass("Y_RANK18", p2)), catalog_weierstrass("S_PRIME_RANK18", p2));
    y17 += same(vgs_quotient(catalog_weierstrass("Y_17", p3)), catalog_weierstrass("S_PRIME_17", p3));
    auto q = vgs_quotient(catalog_weierstrass("J7", p2));
    cons += same(q, catalog_weierstrass("Y_PRIME_RANK18", p2));
    printed += same(q, catalog_weierstrass("Y_PRIME_RANK18_PRINTED", p2));
  }
  std::ostringstream os;
  os << "vgs(Y_RANK18)=S_PRIME_RANK18 " << y18 << "/" << n << ", vgs(Y_17)=S_PRIME_17 " << y17 << "/" << n
     << "; J7 quotient matches the corrected twisted Legendre reading " << cons << "/" << n
     << ", the typeset reading " << printed << "/" << n << "; consistent reading: "
     << (cons == n && printed == 0 ? "Y_PRIME_RANK18" : printed == n ? "Y_PRIME_RANK18_PRINTED" : "neither");
  return {y18 == n && y17 == n && (cons == n || printed == n), os.str()};
}

Verdict c7() {
  Rng rng(707);
  int ok = 0, n = 0;
  while (n < 20) {
    R k1 = rnd(rng, 50, 20), k2 = rnd(rng, 50, 20);
    if (k1 == R(-1) || k2 == R(1) || k2 == R(-1)) continue;
    ++n;
    ok += same(rank17_degeneration_limit("S_17_A", k1, k2), catalog_weierstrass("J1", {k1 * k1, k2 * k2}));
  }
  std::ostringstream os;
  os << "S_17_A limit equals J1(k1^2, k2^2) exactly at " << ok << "/" << n << " random (k1, k2)";
  return {ok == n, os.str()};
}

Verdict c8() {
  const auto t0 = Clock::now();
  int ok = 0, total = 0;
  double worst = 0;
  for (double lam : {2.0, 2.5, 3.0, 10.0}) {
    for (const auto& r : {quadratic_transformation_check(0.125, 0.375, lam, 1e-10),
                          quadratic_transformation_check(0.25, 0.75, lam, 1e-10), holomorphic_period_check(lam, 1e-10)}) {
      ++total;
      ok += r.ok;
      worst = std::max(worst, r.abs_diff / std::max(1.0, std::abs(r.lhs)));
    }
  }
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << ok << "/" << total << " identities within 1e-10, worst relative " << worst << ", " << t << " s";
  return {ok == total && t < 1, os.str()};
}

Verdict c9() {
  Rng rng(909);
  int ok = 0, total = 0;
  for (std::uint64_t p : {5, 7, 11, 13}) {
    PrimeFieldCtx ctx(p);
    for (int k = 0; k < 50; ++k) {
      const int deg = k % 2 ? 5 : 6;
      std::vector<std::uint64_t> cs(deg + 1);
      do {
        for (auto& x : cs) x = uniform_below(rng, p);
      } while (cs.back() == 0 || gcd_with_derivative_degree(cs, ctx) != 0);
      auto r = jacobian_order(cs, ctx);
      ++total;
      ok += r.weil_ok && r.parity_ok && (r.n1 * r.n1 + r.n2) % 2 == 0;
    }
  }
  std::ostringstream os;
  os << ok << "/" << total << " curves inside the Weil interval with N1^2 + N2 even";
  return {ok == total, os.str()};
}

Verdict c10() {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 3; p <= 50; ++p)
    if (is_prime_u64(p)) primes.push_back(p);
  auto rep = count_relation_check({R(2), R(3), R(6)}, primes);
  std::ostringstream os;
  int excluded = 0;
  std::string rel1a, rel2bad;
  for (const auto& r : rep.rows) {
    if (!r.excluded.empty()) {
      ++excluded;
      continue;
    }
    if (r.rel1_a) rel1a += " " + std::to_string(r.p);
    if (r.rel2_plus && !*r.rel2_plus && !*r.rel2_minus) rel2bad += " " + std::to_string(r.p);
  }
  os << "lambda=(2,3,6), " << rep.rows.size() - excluded << " good primes; s = 2 y1 designation: "
     << rep.consistent_designation << " (holds only at p =" << rel1a << "); y2 = +-sqrt(nu) y1 at " << rep.residue_primes
     << " residue primes: " << (rep.rel2_all_residue_primes ? "all" : "fails at p =" + rel2bad)
     << "; observed instead: s = y2 - 1 " << (rep.alt_s_equals_y2_minus_1 ? "always" : "not always")
     << ", y2 = y1 + 1 - chi(nu) " << (rep.alt_y2_equals_y1_plus_1_minus_chi ? "always" : "not always");
  return {rep.criterion_met(), os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Verdict()>> criteria{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    int n = std::atoi(argv[i]);
    if (n < 1 || n > int(criteria.size())) {
      std::cerr << "usage: ksand_acceptance [1-10 ...]\n";
      return 2;
    }
    which.push_back(n);
  }
  if (which.empty())
    for (int n = 1; n <= int(criteria.size()); ++n) which.push_back(n);
  bool all = true;
  for (int n : which) {
    Verdict v;
    try {
      v = criteria[n - 1]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all = all && v.pass;
    std::cout << "criterion " << n << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.detail << std::endl;
  }
  return all ? 0 : 1;
}
