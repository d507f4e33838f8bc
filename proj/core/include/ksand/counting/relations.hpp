#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ksand/moduli.hpp"

namespace ksand {

// Per-prime values of the counting relations between the twisted Legendre
// pencils and the rank-17 fibrations. Sums are residues mod p.
struct RelationRow {
  std::uint64_t p = 0;
  std::string excluded;  // non-empty when p is skipped, with the reason
  std::uint64_t nu = 0;
  int chi_nu = 0;
  std::uint64_t y1 = 0;   // LEGENDRE17_TILDE at L
  std::uint64_t y2 = 0;   // LEGENDRE17 at L'
  std::uint64_t s_a = 0;  // affine sum of Y_17 at L'
  std::uint64_t s_b = 0;  // affine sum of S_PRIME_17 at L'
  std::uint64_t z = 0;    // untwisted pencil at L
  bool rel1_a = false;    // s_a = 2 y1
  bool rel1_b = false;    // s_b = 2 y1
  // Twist relation y2 = r y1 for r^2 = nu. Empty when nu is a non-residue.
  std::optional<bool> rel2_plus, rel2_minus;
  // Relations that hold in the data.
  bool s_a_is_y2_minus_1 = false;
  bool s_b_is_y2_minus_1 = false;
  bool y2_is_y1_plus_1_minus_chi = false;
};

struct RelationReport {
  RosenhainModuli lambda;
  std::array<Rational, 3> L;
  std::array<Rational, 3> Lp;
  Rational nu;
  std::vector<RelationRow> rows;

  bool rel1_uniform_a = false;
  bool rel1_uniform_b = false;
  bool rel2_all_residue_primes = false;
  int residue_primes = 0;
  std::string consistent_designation;  // "Y_17", "S_PRIME_17", "both" or "none"
  bool criterion_met() const { return (rel1_uniform_a || rel1_uniform_b) && rel2_all_residue_primes; }

  bool alt_s_equals_y2_minus_1 = false;
  bool alt_y2_equals_y1_plus_1_minus_chi = false;
};

// Requires l1 l2 l3 to be a rational square; rejects degenerate level-two moduli.
RelationReport count_relation_check(const RosenhainModuli& lambda, const std::vector<std::uint64_t>& primes,
                                    int sign = 1, int threads = 1);

}  // namespace ksand
