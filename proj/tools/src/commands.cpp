#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ksand/counting/closed_form.hpp"
#include "ksand/counting/counting.hpp"
#include "ksand/io/json_io.hpp"
#include "ksand/surfaces/catalog.hpp"

namespace ksand::cli {

using nlohmann::json;

namespace {

std::string b2s(bool b) { return b ? "true" : "false"; }

std::string d2s(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

template <class T>
std::string n2s(T v) {
  return std::to_string(v);
}

std::vector<Rational> rationals(const std::string& text, const char* what, std::size_t arity = 0) {
  std::vector<Rational> v;
  try {
    v = parse_rational_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
  if (arity && v.size() != arity)
    throw UsageError(std::string(what) + " needs " + std::to_string(arity) + " values");
  return v;
}

std::uint64_t need_seed(const std::optional<std::uint64_t>& s, const char* cmd) {
  if (!s) throw UsageError(std::string(cmd) + " samples at random and needs --seed");
  return *s;
}

std::vector<Rational> model_params(const ModelOpts& o) {
  const CatalogEntry* entry;
  try {
    entry = &catalog_entry(o.id);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!o.params.empty()) return rationals(o.params, "--params", entry->parameters.size());
  std::vector<Rational> out;
  for (const auto& name : entry->parameters) {
    const std::string* v = nullptr;
    if (name == "l1") v = &o.l1;
    if (name == "l2") v = &o.l2;
    if (name == "l3") v = &o.l3;
    if (name == "lambda") v = &o.lambda;
    if (!v || v->empty()) throw UsageError(o.id + " needs parameter " + name + " (use --params)");
    out.push_back(rationals(*v, name.c_str(), 1)[0]);
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> parse_primes(const std::string& spec) {
  if (spec.empty()) throw UsageError("empty prime list");
  std::vector<std::uint64_t> out;
  auto num = [&](const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw UsageError("bad prime list entry: " + s);
    return static_cast<std::uint64_t>(v);
  };
  if (auto dots = spec.find(".."); dots != std::string::npos) {
    std::uint64_t lo = num(spec.substr(0, dots)), hi = num(spec.substr(dots + 2));
    if (hi < lo || hi - lo > 10'000'000) throw UsageError("bad prime range: " + spec);
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 3); n <= hi; ++n)
      if (is_prime_u64(n)) out.push_back(n);
  } else {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::uint64_t n = num(item);
      if (n < 3 || !is_prime_u64(n)) throw UsageError("not an odd prime: " + item);
      out.push_back(n);
    }
  }
  if (out.empty()) throw UsageError("no odd primes in " + spec);
  return out;
}

Output cmd_count(const CountOpts& o, const Common& c) {
  const auto primes = parse_primes(o.primes);
  if (o.moduli.empty() == (o.random == 0)) throw UsageError("count needs exactly one of --moduli or --random");
  std::vector<Rational> moduli;
  if (!o.moduli.empty()) moduli = rationals(o.moduli, "--moduli", 3);
  Rng rng(o.random ? need_seed(o.seed, "count --random") : 0);

  Output out;
  out.csv_header = {"p", "a", "b", "c", "closed_form", "character_sum", "agree", "t_naive_ns", "t_conv_ns"};
  json rows = json::array(), skipped = json::array();
  int mismatches = 0;
  for (auto p : primes) {
    PrimeFieldCtx ctx(p);
    std::vector<std::array<std::uint64_t, 3>> triples;
    if (o.random) {
      for (int k = 0; k < o.random; ++k)
        triples.push_back({uniform_below(rng, p), uniform_below(rng, p), uniform_below(rng, p)});
    } else {
      try {
        triples.push_back({ctx.reduce(moduli[0]), ctx.reduce(moduli[1]), ctx.reduce(moduli[2])});
      } catch (const BadReduction&) {
        skipped.push_back(p);
        continue;
      }
    }
    for (const auto& t : triples) {
      CountRow r = count_row(t[0], t[1], t[2], ctx, o.timing, c.threads);
      if (!r.agree) ++mismatches;
      rows.push_back(to_json(r));
      out.csv_rows.push_back({n2s(r.p), n2s(r.a), n2s(r.b), n2s(r.c), n2s(r.closed_form), n2s(r.character_sum),
                              b2s(r.agree), n2s(r.t_naive_ns), n2s(r.t_conv_ns)});
    }
  }
  out.document = {{"command", "count"}, {"rows", rows}, {"skipped_primes", skipped}, {"mismatches", mismatches}};
  out.exit_code = mismatches == 0 ? 0 : 1;
  return out;
}

Output cmd_verify_maps(const VerifyOpts& o, const Common&) {
  if (o.p < 3 || !is_prime_u64(o.p)) throw UsageError("--p must be an odd prime");
  if (o.trials <= 0) throw UsageError("--trials must be positive");
  const std::uint64_t seed = need_seed(o.seed, "verify-maps");
  const auto r18 = rationals(o.rank18, "--rank18", 2);
  const auto r17 = rationals(o.rank17, "--rank17", 3);
  PrimeFieldCtx ctx(o.p);
  std::vector<VerificationReport> reports;
  try {
    if (!o.map.empty()) {
      const auto& d = find_map(o.map);
      reports.push_back(verify_map(o.map, d.family == ParamFamily::Rank18 ? r18 : r17, ctx, o.trials, seed));
    } else if (!o.chain.empty()) {
      const auto& d = find_chain(o.chain);
      reports.push_back(verify_chain(o.chain, d.family == ParamFamily::Rank18 ? r18 : r17, ctx, o.trials, seed));
    } else {
      reports = verify_all(r18, r17, ctx, o.trials, seed);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Output out;
  out.csv_header = {"check", "kind", "p", "trials", "passes", "failures", "exceptional_skips", "ok", "note"};
  json arr = json::array();
  int failed = 0;
  for (const auto& r : reports) {
    failed += !r.ok();
    arr.push_back(to_json(r));
    out.csv_rows.push_back({r.check_id, r.kind, n2s(r.p), n2s(r.trials), n2s(r.passes), n2s(r.failures),
                            n2s(r.exceptional_skips), b2s(r.ok()), r.note});
  }
  out.document = {{"command", "verify-maps"}, {"seed", seed}, {"reports", arr}, {"failed", failed}};
  out.exit_code = failed == 0 ? 0 : 1;
  return out;
}

Output cmd_fibers(const ModelOpts& o, const Common&) {
  if (o.id.empty()) throw UsageError("fibers needs --id");
  const auto params = model_params(o);
  WeierstrassSurface s;
  try {
    s = catalog_weierstrass(o.id, params);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  FiberSummary summary = singular_fiber_summary(s);
  const ExpectedCensus* expected = find_expected_census(o.id);
  Output out;
  out.document = {{"command", "fibers"}, {"params", json::array()}, {"summary", to_json(summary)}};
  for (const auto& q : params) out.document["params"].push_back(q.str());
  bool ok = summary.euler_sum == 24 && summary.collisions.empty();
  if (expected) {
    CensusDiff d = census_diff(expected->fibers, summary.census());
    out.document["expected"] = to_json(expected->fibers);
    out.document["expected_description"] = expected->description;
    out.document["diff"] = to_json(d);
    ok = ok && d.empty();
  } else {
    out.document["expected"] = nullptr;
  }
  out.csv_header = {"place", "count", "type", "ord_c4", "ord_c6", "ord_delta"};
  for (const auto& f : summary.fibers)
    out.csv_rows.push_back({f.place_label(summary.base_variable), n2s(f.count), f.type.str(), n2s(f.orders.c4),
                            n2s(f.orders.c6), n2s(f.orders.delta)});
  out.exit_code = ok ? 0 : 1;
  return out;
}

Output cmd_surface(const ModelOpts& o, const Common& c) {
  Output out;
  if (o.list) {
    json arr = json::array();
    out.csv_header = {"id", "parameters", "kind", "description"};
    for (const auto& e : catalog_entries()) {
      arr.push_back({{"id", e.id}, {"parameters", e.parameters}, {"kind", e.kind}, {"description", e.description}});
      std::string ps;
      for (const auto& p : e.parameters) ps += (ps.empty() ? "" : " ") + p;
      out.csv_rows.push_back({e.id, ps, e.kind, e.description});
    }
    out.document = {{"command", "surface"}, {"catalog", arr}};
    return out;
  }
  if (o.id.empty()) throw UsageError("surface needs --id or --list");
  if (c.format == "csv") throw UsageError("surface dumps are JSON only");
  out.document = {{"command", "surface"}, {"model", to_json(catalog(o.id, model_params(o)))}};
  return out;
}

Output cmd_isogeny(const IsogenyOpts& o, const Common&) {
  if (o.sign != 1 && o.sign != -1) throw UsageError("--sign must be 1 or -1");
  const auto v = rationals(o.rosenhain, "--rosenhain", 3);
  RosenhainModuli lam{v[0], v[1], v[2]};
  validate_rosenhain(lam);
  LevelTwoModuli L = level_two_from_rosenhain(lam, o.sign);
  LevelTwoModuli Lp = richelot_transform(L);
  LevelTwoModuli back = richelot_transform(Lp);
  KummerQuarticParams k = kummer_quartic_params(lam);
  auto triple = [](const Triple& t) { return json::array({t[0].str(), t[1].str(), t[2].str()}); };
  const bool involution_ok = back.L[0] == L.L[0] && back.L[1] == L.L[1] && back.L[2] == L.L[2];
  const bool d_ok = k.identity_residual().is_zero();
  json doc = {{"command", "isogeny"},
              {"rosenhain", json::array({v[0].str(), v[1].str(), v[2].str()})},
              {"L", triple(L.L)},
              {"L_prime", triple(Lp.L)},
              {"richelot_involution", involution_ok},
              {"A", k.A.str()},
              {"B", k.B.str()},
              {"C", k.C.str()},
              {"D", k.D.str()},
              {"D_squared", (k.D * k.D).str()},
              {"D_identity", d_ok}};
  if (L.l) doc["l"] = L.l->str();
  bool ok = involution_ok && d_ok;
  TwistFactor nu = twist_factor(L.L), nup = twist_factor(Lp.L);
  doc["nu"] = nu.nu.str();
  doc["nu_prime"] = nup.nu.str();
  doc["nu_degenerate"] = nu.degenerate;
  const bool recip = (nu.nu * nup.nu) == QuadExt(1);
  doc["nu_reciprocity"] = recip;
  ok = ok && recip;
  Output out;
  out.document = doc;
  out.csv_header = {"key", "value"};
  for (const auto& [key, val] : doc.items())
    if (key != "command") out.csv_rows.push_back({key, val.is_string() ? val.get<std::string>() : val.dump()});
  out.exit_code = ok ? 0 : 1;
  return out;
}

Output cmd_relations(const RelationsOpts& o, const Common& c) {
  const auto v = rationals(o.rosenhain, "--rosenhain", 3);
  const auto primes = parse_primes(o.primes);
  RelationReport rep = count_relation_check({v[0], v[1], v[2]}, primes, o.sign, c.threads);
  Output out;
  out.document = to_json(rep);
  out.document["command"] = "relations";
  out.csv_header = {"p",    "excluded", "nu",   "chi_nu",          "y1",
                    "y2",   "s_Y_17",   "s_S_PRIME_17", "z",       "rel1_Y_17",
                    "rel1_S_PRIME_17", "rel2_plus", "rel2_minus", "s_is_y2_minus_1", "y2_is_y1_plus_1_minus_chi_nu"};
  auto opt = [](const std::optional<bool>& b) { return b ? b2s(*b) : std::string("untestable"); };
  for (const auto& r : rep.rows) {
    if (!r.excluded.empty()) {
      out.csv_rows.push_back({n2s(r.p), r.excluded, "", "", "", "", "", "", "", "", "", "", "", "", ""});
      continue;
    }
    out.csv_rows.push_back({n2s(r.p), "", n2s(r.nu), n2s(r.chi_nu), n2s(r.y1), n2s(r.y2), n2s(r.s_a), n2s(r.s_b),
                            n2s(r.z), b2s(r.rel1_a), b2s(r.rel1_b), opt(r.rel2_plus), opt(r.rel2_minus),
                            b2s(r.s_a_is_y2_minus_1 && r.s_b_is_y2_minus_1), b2s(r.y2_is_y1_plus_1_minus_chi)});
  }
  out.exit_code = rep.criterion_met() ? 0 : 1;
  return out;
}

Output cmd_jacobian(const JacobianOpts& o, const Common&) {
  const auto primes = parse_primes(o.primes);
  if (o.coeffs.empty() == (o.random == 0)) throw UsageError("jacobian needs exactly one of --coeffs or --random");
  if (o.degree != 5 && o.degree != 6) throw UsageError("--degree must be 5 or 6");
  std::vector<long long> fixed;
  if (!o.coeffs.empty()) {
    for (const auto& q : rationals(o.coeffs, "--coeffs")) {
      if (!q.is_integer() || !q.num().fits_slong_p()) throw UsageError("--coeffs must be machine integers");
      fixed.push_back(q.num().get_si());
    }
  }
  Rng rng(o.random ? need_seed(o.seed, "jacobian --random") : 0);
  Output out;
  out.csv_header = {"p", "curve", "N1", "N2", "jac_order", "weil_ok", "parity_ok"};
  json rows = json::array();
  int failed = 0;
  auto emit = [&](const JacobianReport& r) {
    failed += !(r.weil_ok && r.parity_ok);
    rows.push_back(to_json(r));
    std::string curve;
    for (auto c : r.coeffs) curve += (curve.empty() ? "" : " ") + std::to_string(c);
    out.csv_rows.push_back({n2s(r.p), curve, n2s(r.n1), n2s(r.n2), n2s(r.jac_order), b2s(r.weil_ok),
                            b2s(r.parity_ok)});
  };
  for (auto p : primes) {
    PrimeFieldCtx ctx(p);
    if (!o.random) {
      std::vector<std::uint64_t> cs;
      for (auto v : fixed) cs.push_back(ctx.from_int(v));
      try {
        emit(jacobian_order(cs, ctx));
      } catch (const std::invalid_argument& e) {
        throw UsageError("p = " + std::to_string(p) + ": " + e.what());
      }
      continue;
    }
    for (int k = 0; k < o.random; ++k) {
      for (;;) {
        std::vector<std::uint64_t> cs(o.degree + 1);
        for (auto& x : cs) x = uniform_below(rng, p);
        if (cs.back() == 0 || gcd_with_derivative_degree(cs, ctx) != 0) continue;
        emit(jacobian_order(cs, ctx));
        break;
      }
    }
  }
  out.document = {{"command", "jacobian"}, {"rows", rows}, {"failed", failed}};
  out.exit_code = failed == 0 ? 0 : 1;
  return out;
}

Output cmd_periods(const PeriodsOpts& o, const Common&) {
  if (!(o.tol > 0)) throw UsageError("--tol must be positive");
  Output out;
  out.csv_header = {"check", "lambda", "lhs", "rhs", "abs_diff", "ok"};
  json rows = json::array();
  int failed = 0;
  for (const auto& q : rationals(o.lambdas, "--lambda")) {
    const double lam = q.to_double();
    if (!(lam > 1)) throw UsageError("lambda must exceed 1");
    auto add = [&](const std::string& name, const PeriodReport& r) {
      failed += !r.ok;
      json j = to_json(r);
      j["check"] = name;
      rows.push_back(j);
      out.csv_rows.push_back({name, d2s(r.lambda), d2s(r.lhs), d2s(r.rhs), d2s(r.abs_diff), b2s(r.ok)});
    };
    add("quadratic_1/8_3/8", quadratic_transformation_check(0.125, 0.375, lam, o.tol));
    add("quadratic_1/4_3/4", quadratic_transformation_check(0.25, 0.75, lam, o.tol));
    add("holomorphic_period", holomorphic_period_check(lam, o.tol));
  }
  out.document = {{"command", "periods"}, {"rows", rows}, {"failed", failed}};
  out.exit_code = failed == 0 ? 0 : 1;
  return out;
}

Output cmd_bench(const BenchOpts& o, const Common& c) {
  const auto primes = parse_primes(o.primes);
  if (o.repeat <= 0) throw UsageError("--repeat must be positive");
  Rng rng(o.seed.value_or(1));
  Output out;
  out.csv_header = {"p", "kernel", "value", "median_ns"};
  json rows = json::array();
  int disagreements = 0;
  for (auto p : primes) {
    PrimeFieldCtx ctx(p);
    const std::uint64_t a = uniform_below(rng, p), b = uniform_below(rng, p), cc = uniform_below(rng, p);
    std::vector<std::pair<std::string, std::function<std::uint64_t()>>> kernels;
    // The naive kernel is cubic in p.
    if (p < 1000) kernels.emplace_back("naive", [&] { return closed_form_count(a, b, cc, ctx, Kernel::Naive); });
    kernels.emplace_back("convolution", [&] { return closed_form_count(a, b, cc, ctx, Kernel::Convolution); });
    if (p < (1u << 20)) kernels.emplace_back("ntt", [&] { return closed_form_count(a, b, cc, ctx, Kernel::Ntt); });
    auto cover = catalog_double_cover("LEGENDRE17", {Rational(static_cast<long>(a)), Rational(static_cast<long>(b)),
                                                     Rational(static_cast<long>(cc))});
    kernels.emplace_back("character_sum", [&] { return character_sum_count(cover, ctx, c.threads); });
    std::optional<std::uint64_t> ref;
    for (auto& [name, fn] : kernels) {
      std::vector<long long> ts;
      std::uint64_t value = 0;
      for (int r = 0; r < o.repeat; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        value = fn();
        ts.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count());
      }
      std::sort(ts.begin(), ts.end());
      const long long med = ts[ts.size() / 2];
      if (ref && *ref != value) ++disagreements;
      ref = value;
      rows.push_back({{"p", p}, {"kernel", name}, {"value", value}, {"median_ns", med}});
      out.csv_rows.push_back({n2s(p), name, n2s(value), n2s(med)});
    }
  }
  out.document = {{"command", "bench"}, {"rows", rows}, {"disagreements", disagreements}};
  out.exit_code = disagreements == 0 ? 0 : 1;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

void write_output(const Output& out, const Common& c, std::ostream& os) {
  std::ofstream file;
  std::ostream* dst = &os;
  if (!c.output.empty()) {
    file.open(c.output, std::ios::binary);
    if (!file) throw UsageError("cannot open " + c.output);
    dst = &file;
  }
  if (c.format == "json") {
    *dst << out.document.dump(2) << "\n";
    return;
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) *dst << (i ? "," : "") << csv_field(cells[i]);
    *dst << "\r\n";
  };
  line(out.csv_header);
  for (const auto& r : out.csv_rows) line(r);
}

}  // namespace ksand::cli
