// report.hpp — JSON/CSV serialization for every report type. Output contains
// no timestamps or environment data, so identical runs are byte-identical.
#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "specdecay/admissibility.hpp"
#include "specdecay/calculus.hpp"
#include "specdecay/carleson.hpp"
#include "specdecay/certificates.hpp"
#include "specdecay/rates.hpp"

namespace specdecay {

// Envelope for one CLI invocation: the command, its effective inputs, the
// typed outputs, truncation diagnostics, and human-readable warnings.
struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  nlohmann::json truncation = nlohmann::json::object();
  std::vector<std::string> warnings;
};

// Numeric output wrapped with its method tag ("closed-form" | "oracle").
nlohmann::json tagged(double value, const char* method);

nlohmann::json to_json(const SupOverModes& s);
nlohmann::json to_json(const WeissReport& r);
nlohmann::json to_json(const AdmissibilityReport& r);
nlohmann::json to_json(const PlancherelReport& r);
nlohmann::json to_json(const RateModel& r);
nlohmann::json to_json(const Lemma43Constants& r);
nlohmann::json to_json(const Thm44Report& r);
nlohmann::json to_json(const CarlesonScan& r);
nlohmann::json to_json(const Certificate& r);
nlohmann::json to_json(const Prop57Result& r);
nlohmann::json to_json(const RunReport& r);

nlohmann::json curve_to_json(const std::string& xname, const std::string& yname,
                             std::span<const std::pair<double, double>> curve);

// CSV with '.' decimal separator regardless of locale; shortest round-trip
// number formatting.
std::string curve_to_csv(const std::string& xname, const std::string& yname,
                         std::span<const std::pair<double, double>> curve);

// Flattens the report to key,value rows (dotted paths); curves embedded in
// outputs keep per-point rows.
std::string report_to_csv(const RunReport& r);

}  // namespace specdecay
