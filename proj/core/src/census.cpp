#include <json.hpp>

#include <string_view>

#include "ksand/surfaces/fibers.hpp"

namespace ksand {

namespace detail {
extern const std::string_view kCensusJson;
}

const std::vector<ExpectedCensus>& expected_censuses() {
  static const std::vector<ExpectedCensus> table = [] {
    std::vector<ExpectedCensus> out;
    auto doc = nlohmann::json::parse(detail::kCensusJson);
    for (const auto& e : doc.at("censuses")) {
      ExpectedCensus c;
      c.catalog_id = e.at("catalog_id").get<std::string>();
      c.description = e.value("description", "");
      for (const auto& [k, v] : e.at("fibers").items()) c.fibers[KodairaType::parse(k).str()] = v.get<int>();
      out.push_back(std::move(c));
    }
    return out;
  }();
  return table;
}

const ExpectedCensus* find_expected_census(const std::string& catalog_id) {
  for (const auto& c : expected_censuses())
    if (c.catalog_id == catalog_id) return &c;
  return nullptr;
}

}  // namespace ksand
