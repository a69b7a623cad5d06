#pragma once

// JSON and CSV emission. Objects use nlohmann::json's sorted key order, so
// dump() is canonical; `canonical` additionally drops wall-clock fields.

#include <json.hpp>

#include <string>
#include <string_view>

#include "mvsat/beta.hpp"
#include "mvsat/harness.hpp"
#include "mvsat/lp.hpp"
#include "mvsat/oracle.hpp"
#include "mvsat/pipeline.hpp"

namespace mvsat {

std::string_view to_string(NegationMode m);
std::string_view to_string(BoundMode m);
std::string_view to_string(RoundingBase r);
std::string_view to_string(Objective o);
std::string_view to_string(ArithmeticMode a);
std::string_view to_string(LpStatus s);
std::string_view to_string(Claim c);
std::string_view to_string(SatStatus s);
std::string_view to_string(OracleOutcome o);

nlohmann::json to_json(const OpCount& ops);
nlohmann::json to_json(const LpSystem& s);
nlohmann::json to_json(const LpSolution& s);
nlohmann::json to_json(const PipelineConfig& c);
nlohmann::json to_json(const PipelineResult& r);
nlohmann::json to_json(const OracleVerdict& v);
nlohmann::json to_json(const DiffRecord& r, bool canonical);
nlohmann::json to_json(const DiffReport& r, bool canonical);
nlohmann::json to_json(const BenchReport& r, bool canonical);

/// One row per record, header first.
std::string to_csv(const DiffReport& r, bool canonical);
std::string to_csv(const BenchReport& r);

}  // namespace mvsat
