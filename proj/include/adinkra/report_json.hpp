#pragma once

#include <json.hpp>

#include "adinkra/graph.hpp"
#include "adinkra/monodromy.hpp"

namespace adinkra {

inline constexpr int kReportSchema = 1;

nlohmann::json to_json(const monodromy::AnalysisReport& r);

// Rebuilds the analyzed Adinkra from a report: quotient graph of the recorded
// generators, recorded color relabeling, recorded dash bits.
graph::Adinkra adinkra_from_report(const nlohmann::json& report);

}  // namespace adinkra
