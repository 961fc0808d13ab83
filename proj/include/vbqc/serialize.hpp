#pragma once

#include <string>

#include <json.hpp>

#include "vbqc/bell.hpp"
#include "vbqc/session.hpp"

namespace vbqc {

using json = nlohmann::ordered_json;

// External formats. Angles travel as integer eighths of pi, graphs as
// 0-based edge lists, bits as 0/1. Schemas are documented in the README.

json angle_to_json(Angle a);
Angle angle_from_json(const json& j);

json basis_to_json(const Basis& b);
Basis basis_from_json(const json& j);

json graph_to_json(const ClusterGraph& g);
ClusterGraph graph_from_json(const json& j);

json pattern_to_json(const PatternSpec& p);
PatternSpec pattern_from_json(const json& j);

json deviation_to_json(const DeviationModel& m);  // DeltaConditioned is not serializable
DeviationModel deviation_from_json(const json& j);

json trap_spec_to_json(const TrapSpec& t);

// One JSON-lines record per run.
json transcript_to_json(const RunTranscript& t, int run_index);

json report_to_json(const VerificationReport& r);
std::string report_to_csv(const VerificationReport& r);

json correlation_to_json(const CorrelationEstimate& e);
json chsh_to_json(const CHSHResult& r);

}  // namespace vbqc
