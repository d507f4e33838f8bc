#include "ksand/io/json_io.hpp"

#include <sstream>

namespace ksand {

using nlohmann::json;

json to_json(const Rational& q) { return q.str(); }

json to_json(const UniPoly& p, const std::string& var) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return {{"text", p.str(var)}, {"coefficients", coeffs}};
}

namespace {

json bipoly_json(const BiPoly& f) {
  json rows = json::array();
  for (const auto& c : f.coeffs()) {
    json r = json::array();
    for (const auto& q : c.coeffs()) r.push_back(q.str());
    rows.push_back(r);
  }
  return rows;
}

json rational_array(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(q.str());
  return a;
}

}  // namespace

json to_json(const SurfaceModel& s) {
  return std::visit(
      [](const auto& m) -> json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, WeierstrassSurface>) {
          json j = {{"kind", "weierstrass"},
                    {"id", m.catalog_id},
                    {"base_variable", m.base_variable},
                    {"a2", to_json(m.a2, m.base_variable)},
                    {"a4", to_json(m.a4, m.base_variable)},
                    {"a6", to_json(m.a6, m.base_variable)}};
          if (!m.rescaling.empty()) j["rescaling"] = m.rescaling;
          return j;
        } else if constexpr (std::is_same_v<T, AffineDoubleCover>) {
          // f[i][k] is the coefficient of x^i w^k.
          return {{"kind", "double_cover"},
                  {"id", m.catalog_id},
                  {"x_variable", m.x_variable},
                  {"base_variable", m.base_variable},
                  {"f", bipoly_json(m.f)}};
        } else if constexpr (std::is_same_v<T, QuarticSurface>) {
          return {{"kind", "quartic"}, {"id", m.catalog_id},
                  {"xi", rational_array({m.xi.begin(), m.xi.end()})}};
        } else if constexpr (std::is_same_v<T, MirrorCubic>) {
          return {{"kind", "mirror_cubic"}, {"id", m.catalog_id}, {"lambda", m.lambda.str()}, {"mu", m.mu.str()}};
        } else {
          return {{"kind", "elliptic_curve"}, {"id", m.catalog_id}, {"a2", m.a2.str()},
                  {"a4", m.a4.str()},         {"a6", m.a6.str()}};
        }
      },
      s);
}

json to_json(const Census& c) {
  json j = json::object();
  for (const auto& [k, v] : c) j[k] = v;
  return j;
}

json to_json(const CensusDiff& d) { return {{"missing", to_json(d.missing)}, {"unexpected", to_json(d.unexpected)}}; }

json to_json(const FiberSummary& s) {
  json fibers = json::array();
  for (const auto& f : s.fibers) {
    fibers.push_back({{"place", f.place_label(s.base_variable)},
                      {"count", f.count},
                      {"type", f.type.str()},
                      {"orders", {{"c4", f.orders.c4}, {"c6", f.orders.c6}, {"delta", f.orders.delta}}}});
  }
  return {{"id", s.catalog_id},          {"base_variable", s.base_variable}, {"fibers", fibers},
          {"census", to_json(s.census())}, {"euler_sum", s.euler_sum},        {"collisions", s.collisions}};
}

json to_json(const VerificationReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses)
    w.push_back({{"base", x.base}, {"x", x.x}, {"y", x.y}, {"detail", x.detail}});
  return {{"check", r.check_id},
          {"kind", r.kind},
          {"params", rational_array(r.params)},
          {"p", r.p},
          {"trials", r.trials},
          {"passes", r.passes},
          {"failures", r.failures},
          {"exceptional_skips", r.exceptional_skips},
          {"failure_probability_bound", r.failure_probability_bound},
          {"note", r.note},
          {"ok", r.ok()},
          {"witnesses", w}};
}

json to_json(const CountRow& r) {
  return {{"p", r.p},
          {"a", r.a},
          {"b", r.b},
          {"c", r.c},
          {"closed_form", r.closed_form},
          {"closed_form_naive", r.closed_form_naive},
          {"character_sum", r.character_sum},
          {"agree", r.agree},
          {"t_naive_ns", r.t_naive_ns},
          {"t_conv_ns", r.t_conv_ns}};
}

json to_json(const JacobianReport& r) {
  return {{"p", r.p},   {"curve", r.coeffs},        {"N1", r.n1},           {"N2", r.n2},
          {"jac_order", r.jac_order}, {"parity_ok", r.parity_ok}, {"weil_ok", r.weil_ok}};
}

json to_json(const RelationRow& r) {
  json j = {{"p", r.p}};
  if (!r.excluded.empty()) {
    j["excluded"] = r.excluded;
    return j;
  }
  auto opt = [](const std::optional<bool>& b) -> json { return b ? json(*b) : json(nullptr); };
  j.update({{"nu", r.nu},
            {"chi_nu", r.chi_nu},
            {"y1", r.y1},
            {"y2", r.y2},
            {"s_Y_17", r.s_a},
            {"s_S_PRIME_17", r.s_b},
            {"z", r.z},
            {"rel1_Y_17", r.rel1_a},
            {"rel1_S_PRIME_17", r.rel1_b},
            {"rel2_plus", opt(r.rel2_plus)},
            {"rel2_minus", opt(r.rel2_minus)},
            {"s_Y_17_is_y2_minus_1", r.s_a_is_y2_minus_1},
            {"s_S_PRIME_17_is_y2_minus_1", r.s_b_is_y2_minus_1},
            {"y2_is_y1_plus_1_minus_chi_nu", r.y2_is_y1_plus_1_minus_chi}});
  return j;
}

json to_json(const RelationReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back(to_json(row));
  return {{"lambda", rational_array({r.lambda.l1, r.lambda.l2, r.lambda.l3})},
          {"L", rational_array({r.L.begin(), r.L.end()})},
          {"L_prime", rational_array({r.Lp.begin(), r.Lp.end()})},
          {"nu", r.nu.str()},
          {"rows", rows},
          {"rel1_uniform_Y_17", r.rel1_uniform_a},
          {"rel1_uniform_S_PRIME_17", r.rel1_uniform_b},
          {"rel2_all_residue_primes", r.rel2_all_residue_primes},
          {"residue_primes", r.residue_primes},
          {"consistent_designation", r.consistent_designation},
          {"criterion_met", r.criterion_met()},
          {"observed_s_equals_y2_minus_1", r.alt_s_equals_y2_minus_1},
          {"observed_y2_equals_y1_plus_1_minus_chi_nu", r.alt_y2_equals_y1_plus_1_minus_chi}};
}

json to_json(const PeriodReport& r) {
  return {{"lambda", r.lambda}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"abs_diff", r.abs_diff}, {"tol", r.tol}, {"ok", r.ok}};
}

json to_json(const SubstitutionReport& r) {
  return {{"p", r.p},           {"lambda", r.lambda.str()}, {"trials", r.trials}, {"passes", r.passes},
          {"failures", r.failures}, {"excluded", r.excluded}, {"ok", r.ok()}};
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in rational list: " + csv);
    out.push_back(Rational::parse(item));
  }
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

}  // namespace ksand
