#pragma once

#include <json.hpp>

#include "ksand/counting/count_report.hpp"
#include "ksand/counting/jacobian.hpp"
#include "ksand/counting/relations.hpp"
#include "ksand/maps/verify.hpp"
#include "ksand/periods/periods.hpp"
#include "ksand/surfaces/fibers.hpp"
#include "ksand/surfaces/mirror.hpp"

namespace ksand {

// Rationals are written as "n/d" strings, quadratic numbers as "a + b*sqrt(d)".
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const UniPoly& p, const std::string& var);
nlohmann::json to_json(const SurfaceModel& s);
nlohmann::json to_json(const FiberSummary& s);
nlohmann::json to_json(const Census& c);
nlohmann::json to_json(const CensusDiff& d);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const CountRow& r);
nlohmann::json to_json(const JacobianReport& r);
nlohmann::json to_json(const RelationRow& r);
nlohmann::json to_json(const RelationReport& r);
nlohmann::json to_json(const PeriodReport& r);
nlohmann::json to_json(const SubstitutionReport& r);

// Parse "n/d" or "n" strings; throws std::invalid_argument.
std::vector<Rational> parse_rational_list(const std::string& csv);

}  // namespace ksand
