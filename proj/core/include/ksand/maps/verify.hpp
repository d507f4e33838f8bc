#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksand/maps/maps.hpp"

namespace ksand {

struct Witness {
  std::uint64_t base = 0, x = 0, y = 0;
  std::string detail;
};

struct VerificationReport {
  std::string check_id;
  std::string kind;  // map | chain | involution | commutation | doubling
  std::vector<Rational> params;
  std::uint64_t p = 0;
  int trials = 0;
  int passes = 0;
  int failures = 0;
  int exceptional_skips = 0;
  std::vector<Witness> witnesses;  // first few failures
  double failure_probability_bound = 0;
  std::string note;

  bool ok() const { return failures == 0 && passes == trials; }
};

struct ChainDescriptor {
  std::string chain_id;
  std::vector<std::string> maps;
  ParamFamily family;
};

const std::vector<ChainDescriptor>& chain_catalog();
const ChainDescriptor& find_chain(const std::string& chain_id);

VerificationReport verify_map(const std::string& map_id, const std::vector<Rational>& params,
                              const PrimeFieldCtx& ctx, int trials, std::uint64_t seed,
                              const std::optional<std::string>& target_override = std::nullopt);
VerificationReport verify_chain(const std::string& chain_id, const std::vector<Rational>& params,
                                const PrimeFieldCtx& ctx, int trials, std::uint64_t seed);
// f(f(P)) = P.
VerificationReport verify_involution(const std::string& map_id, const std::vector<Rational>& params,
                                     const PrimeFieldCtx& ctx, int trials, std::uint64_t seed);
// a(b(P)) = b(a(P)) for two self-maps of one surface.
VerificationReport verify_commutation(const std::string& map_a, const std::string& map_b,
                                      const std::vector<Rational>& params, const PrimeFieldCtx& ctx, int trials,
                                      std::uint64_t seed);
// back(forth(P)) = [2]P up to the sign of y; the observed sign goes into note.
VerificationReport verify_doubling(const std::string& forth, const std::string& back,
                                   const std::vector<Rational>& params, const PrimeFieldCtx& ctx, int trials,
                                   std::uint64_t seed);

// Every catalog map, every chain, every involution, the commutation and doubling checks.
std::vector<VerificationReport> verify_all(const std::vector<Rational>& rank18_params,
                                           const std::vector<Rational>& rank17_params, const PrimeFieldCtx& ctx,
                                           int trials, std::uint64_t seed);

}  // namespace ksand
