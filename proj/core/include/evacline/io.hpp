#pragma once

#include <string>

#include <json.hpp>

#include "evacline/analysis.hpp"
#include "evacline/engine.hpp"
#include "evacline/plans.hpp"

namespace evacline {

/// Version stamped into every emitted JSON document.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Trajectory& traj);       // [[position, time], ...]
nlohmann::json to_json(const AgentSpec& agent);
nlohmann::json to_json(const EvacPlan& plan);
nlohmann::json to_json(const EvacOutcome& outcome);
nlohmann::json to_json(const CrReport& report);

/// Event trace as CSV rows: time,agent,event,position.
std::string trace_csv(const EvacOutcome& outcome);

/// Sweep records as CSV rows: x,evac_time,ratio (ascending x).
std::string sweep_csv(const CrReport& report);

/// Fixed-precision decimal used by the CSV writers (12 significant digits).
std::string format_double(double v);

}  // namespace evacline
