#include "ksand/maps/verify.hpp"

#include <algorithm>
#include <functional>

namespace ksand {

namespace {

constexpr int kMaxWitnesses = 5;

const std::vector<ChainDescriptor> kChains = {
    {"RANK18_A", {"PSI", "PHI", "CHI"}, ParamFamily::Rank18},
    {"RANK18_B", {"PSI", "ISOG", "PHI_PRIME"}, ParamFamily::Rank18},
    {"RANK17_A", {"PSI_17", "PHI_17", "CHI_17"}, ParamFamily::Rank17},
    {"RANK17_B", {"PSI_17", "ISOG_17", "PHI_PRIME_17"}, ParamFamily::Rank17},
    {"RANK17_A_LEGENDRE", {"PSI_17", "PHI_17", "CHI_17", "SWAP_17"}, ParamFamily::Rank17},
};

using Point = FiberedPoint<FpField>;

FiberedPoint<FpField> draw(const SurfaceModel& s, const PrimeFieldCtx& ctx, Rng& rng) {
  if (auto* w = std::get_if<WeierstrassSurface>(&s)) return sample_point(*w, ctx, rng);
  if (auto* c = std::get_if<AffineDoubleCover>(&s)) return sample_point(*c, ctx, rng);
  throw std::logic_error("sampling needs a fibered model");
}

// Shared trial loop: `check` returns an empty string on success, a failure
// description otherwise, and may throw ExceptionalPoint to request a resample.
VerificationReport run_trials(VerificationReport rep, const SurfaceModel& source, const PrimeFieldCtx& ctx,
                              int trials, std::uint64_t seed, int identity_degree,
                              const std::function<std::string(const Point&)>& check) {
  rep.p = ctx.p();
  rep.trials = trials;
  Rng rng(seed);
  const int max_skips = 10 * trials + 100;
  int done = 0;
  while (done < trials) {
    Point P = draw(source, ctx, rng);
    std::string failure;
    try {
      failure = check(P);
    } catch (const ExceptionalPoint&) {
      if (++rep.exceptional_skips > max_skips) {
        rep.note = "too many exceptional samples";
        break;
      }
      continue;
    }
    ++done;
    if (failure.empty()) {
      ++rep.passes;
    } else {
      ++rep.failures;
      if (static_cast<int>(rep.witnesses.size()) < kMaxWitnesses)
        rep.witnesses.push_back({P.base.value(), P.x.value(), P.y.value(), failure});
    }
  }
  rep.failure_probability_bound =
      static_cast<double>(trials) * identity_degree / static_cast<double>(ctx.p());
  return rep;
}

bool same_point(const Point& a, const Point& b) { return a.base == b.base && a.x == b.x && a.y == b.y; }

}  // namespace

const std::vector<ChainDescriptor>& chain_catalog() { return kChains; }

const ChainDescriptor& find_chain(const std::string& chain_id) {
  auto it = std::find_if(kChains.begin(), kChains.end(), [&](const ChainDescriptor& c) { return c.chain_id == chain_id; });
  if (it == kChains.end()) throw std::invalid_argument("unknown chain id: " + chain_id);
  return *it;
}

VerificationReport verify_map(const std::string& map_id, const std::vector<Rational>& params, const PrimeFieldCtx& ctx,
                              int trials, std::uint64_t seed, const std::optional<std::string>& target_override) {
  BoundMap m = bind_map(map_id, params, target_override);
  FpField F(ctx);
  VerificationReport rep;
  rep.check_id = map_id;
  rep.kind = "map";
  rep.params = params;
  if (target_override) rep.note = "target " + *target_override;
  return run_trials(rep, m.source, ctx, trials, seed, m.desc.identity_degree, [&](const Point& P) -> std::string {
    Point Q = apply_map(m, F, P);
    return on_surface(m.target, F, Q) ? "" : "image not on " + m.desc.target_id;
  });
}

VerificationReport verify_chain(const std::string& chain_id, const std::vector<Rational>& params,
                                const PrimeFieldCtx& ctx, int trials, std::uint64_t seed) {
  const ChainDescriptor& c = find_chain(chain_id);
  std::vector<BoundMap> legs;
  int degree = 0;
  for (const auto& id : c.maps) {
    legs.push_back(bind_map(id, params));
    degree += legs.back().desc.identity_degree;
  }
  for (std::size_t i = 1; i < legs.size(); ++i)
    if (legs[i].desc.source_id != legs[i - 1].desc.target_id)
      throw std::logic_error(chain_id + ": legs do not compose");
  FpField F(ctx);
  VerificationReport rep;
  rep.check_id = chain_id;
  rep.kind = "chain";
  rep.params = params;
  return run_trials(rep, legs.front().source, ctx, trials, seed, degree, [&](const Point& P) -> std::string {
    Point Q = P;
    for (const auto& leg : legs) {
      Q = apply_map(leg, F, Q);
      if (!on_surface(leg.target, F, Q)) return "leg " + leg.desc.map_id + " leaves " + leg.desc.target_id;
    }
    return "";
  });
}

VerificationReport verify_involution(const std::string& map_id, const std::vector<Rational>& params,
                                     const PrimeFieldCtx& ctx, int trials, std::uint64_t seed) {
  BoundMap m = bind_map(map_id, params);
  if (m.desc.source_id != m.desc.target_id) throw std::invalid_argument(map_id + " is not a self-map");
  FpField F(ctx);
  VerificationReport rep;
  rep.check_id = map_id + "^2";
  rep.kind = "involution";
  rep.params = params;
  return run_trials(rep, m.source, ctx, trials, seed, m.desc.identity_degree, [&](const Point& P) -> std::string {
    Point Q = apply_map(m, F, apply_map(m, F, P));
    return same_point(P, Q) ? "" : "square is not the identity";
  });
}

VerificationReport verify_commutation(const std::string& map_a, const std::string& map_b,
                                      const std::vector<Rational>& params, const PrimeFieldCtx& ctx, int trials,
                                      std::uint64_t seed) {
  BoundMap a = bind_map(map_a, params);
  BoundMap b = bind_map(map_b, params);
  if (a.desc.source_id != b.desc.source_id || a.desc.target_id != a.desc.source_id ||
      b.desc.target_id != b.desc.source_id)
    throw std::invalid_argument(map_a + " and " + map_b + " are not self-maps of one surface");
  FpField F(ctx);
  VerificationReport rep;
  rep.check_id = map_a + "*" + map_b;
  rep.kind = "commutation";
  rep.params = params;
  return run_trials(rep, a.source, ctx, trials, seed, 2 * a.desc.identity_degree, [&](const Point& P) -> std::string {
    Point ab = apply_map(a, F, apply_map(b, F, P));
    Point ba = apply_map(b, F, apply_map(a, F, P));
    return same_point(ab, ba) ? "" : "maps do not commute";
  });
}

VerificationReport verify_doubling(const std::string& forth, const std::string& back,
                                   const std::vector<Rational>& params, const PrimeFieldCtx& ctx, int trials,
                                   std::uint64_t seed) {
  BoundMap f = bind_map(forth, params);
  BoundMap g = bind_map(back, params);
  if (f.desc.target_id != g.desc.source_id || g.desc.target_id != f.desc.source_id)
    throw std::invalid_argument(forth + " and " + back + " are not mutually dual");
  const auto& S = std::get<WeierstrassSurface>(f.source);
  FpField F(ctx);
  VerificationReport rep;
  rep.check_id = back + "*" + forth;
  rep.kind = "doubling";
  rep.params = params;
  int plus = 0, minus = 0;
  rep = run_trials(rep, f.source, ctx, trials, seed, 4 * f.desc.identity_degree, [&](const Point& P) -> std::string {
    Point D = double_point(S, F, P);
    Point Q = apply_map(g, F, apply_map(f, F, P));
    if (!(Q.base == D.base && Q.x == D.x)) return "x-coordinate differs from doubling";
    if (Q.y == D.y) {
      ++plus;
      return "";
    }
    if (Q.y == -D.y) {
      ++minus;
      return "";
    }
    return "y-coordinate differs from doubling";
  });
  if (plus && minus)
    rep.note = "mixed signs";
  else
    rep.note = minus ? "equals [-2]" : "equals [2]";
  return rep;
}

std::vector<VerificationReport> verify_all(const std::vector<Rational>& rank18_params,
                                           const std::vector<Rational>& rank17_params, const PrimeFieldCtx& ctx,
                                           int trials, std::uint64_t seed) {
  auto params_for = [&](ParamFamily fam) { return fam == ParamFamily::Rank18 ? rank18_params : rank17_params; };
  std::vector<VerificationReport> out;
  std::uint64_t s = seed;
  for (const auto& m : map_catalog()) out.push_back(verify_map(m.map_id, params_for(m.family), ctx, trials, s++));
  for (const auto& c : chain_catalog()) out.push_back(verify_chain(c.chain_id, params_for(c.family), ctx, trials, s++));
  for (const auto& m : map_catalog())
    if (m.involution) out.push_back(verify_involution(m.map_id, params_for(m.family), ctx, trials, s++));
  out.push_back(verify_commutation("IOTA", "JMATH", rank18_params, ctx, trials, s++));
  out.push_back(verify_commutation("IOTA_17", "JMATH_17", rank17_params, ctx, trials, s++));
  out.push_back(verify_doubling("ISOG", "DUAL_ISOG", rank18_params, ctx, trials, s++));
  out.push_back(verify_doubling("DUAL_ISOG", "ISOG", rank18_params, ctx, trials, s++));
  out.push_back(verify_doubling("CHI", "CHI_PRIME", rank18_params, ctx, trials, s++));
  out.push_back(verify_doubling("ISOG_17", "DUAL_ISOG_17", rank17_params, ctx, trials, s++));
  out.push_back(verify_doubling("CHI_17", "CHI_PRIME_17", rank17_params, ctx, trials, s++));
  return out;
}

}  // namespace ksand
