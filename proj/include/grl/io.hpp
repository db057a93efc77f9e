#pragma once

#include "grl/capacity.hpp"
#include "grl/partition.hpp"
#include "grl/scenario.hpp"
#include "grl/theorems.hpp"

#include <json.hpp>

#include <string>

namespace grl::io {

using json = nlohmann::ordered_json;

json rational_to_json(const Rational& r);
/// Accepts "p/q" / "p" strings and plain JSON integers.
Rational rational_from_json(const json& j, const std::string& context);
/// "p/q", "inf", or {"decimal": v, "error_bound": e}.
json ext_value_to_json(const ExtValue& v);

json subset_to_json(SubsetMask mask, int n);
SubsetMask subset_from_json(const json& j, int n, const std::string& context);

// capacity files: {"space": {"size": n, "labels": [...]},
//                  "values": {"<subset-bitmask-decimal>": "p/q", ...}}
// the map must be total; missing or extraneous subsets are parse errors
json capacity_to_json(const Capacity& c);
Capacity capacity_from_json(const json& j);
Capacity load_capacity(const std::string& path);

json alpha_to_json(const AlphaCapacity& v);
AlphaCapacity alpha_from_json(const json& j);

json scenario_to_json(const Scenario& sc);
Scenario scenario_from_json(const json& j);
Scenario load_scenario(const std::string& path);

json flags_to_json(const PropertyFlags& f);
json step_to_json(const StepFunction& u);
json trace_to_json(const EnvelopeTrace& t);
json report_to_json(const GRLReport& r);
std::string report_to_text(const GRLReport& r);

json suite_to_json(const theorems::SuiteReport& r);
std::string suite_to_csv(const theorems::SuiteReport& r);
std::string suite_to_text(const theorems::SuiteReport& r);

json instance_to_json(const theorems::Instance& inst);

/// RFC-style CSV field quoting.
std::string csv_field(const std::string& s);

json parse_file(const std::string& path);

}  // namespace grl::io
