#include "evacline/io.hpp"

#include <cstdio>

namespace evacline {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

json vertices_json(const Trajectory& traj) {
    json arr = json::array();
    for (const TurningPoint& v : traj.vertices()) {
        arr.push_back(json::array({v.position, v.time}));
    }
    return arr;
}

const char* capability_name(Capability c) {
    switch (c) {
        case Capability::Sender: return "sender";
        case Capability::Receiver: return "receiver";
        case Capability::Wireless: return "wireless";
    }
    return "?";
}

json reaction_json(const ReactionPolicy& r) {
    switch (r.kind) {
        case ReactionPolicy::Kind::GoToExit:
            return {{"kind", "go-to-exit"}};
        case ReactionPolicy::Kind::PursueThenExit:
            return {{"kind", "pursue-then-exit"}, {"targets", r.pursue_ids}};
        case ReactionPolicy::Kind::FollowBaseline:
            return {{"kind", "follow-baseline"}};
    }
    return {};
}

}  // namespace

json to_json(const Trajectory& traj) {
    return {{"turning_points", vertices_json(traj)},
            {"terminal", traj.terminal() == TerminalBehavior::HoldLastPosition ? "hold" : "extend"}};
}

json to_json(const AgentSpec& agent) {
    json j = to_json(agent.baseline);
    j["id"] = agent.id;
    j["capability"] = capability_name(agent.capability);
    j["reaction"] = reaction_json(agent.reaction);
    return j;
}

json to_json(const EvacPlan& plan) {
    json agents = json::array();
    for (const AgentSpec& a : plan.agents) agents.push_back(to_json(a));
    return {{"schema", kSchemaVersion},
            {"name", plan.name},
            {"params", plan.params},
            {"horizon", plan.horizon},
            {"agents", agents}};
}

json to_json(const EvacOutcome& outcome) {
    return {{"schema", kSchemaVersion},
            {"target", outcome.target},
            {"finder", outcome.finder_id},
            {"discovery_time", outcome.discovery_time},
            {"notify_times", outcome.notify_time},
            {"arrival_times", outcome.arrival_time},
            {"evac_time", outcome.evac_time},
            {"ratio", outcome.evac_time / std::abs(outcome.target)}};
}

json to_json(const CrReport& report) {
    json records = json::array();
    for (const CrRecord& r : report.records) {
        records.push_back({{"x", r.x}, {"evac_time", r.evac_time}, {"ratio", r.ratio}});
    }
    json j = {{"schema", kSchemaVersion},
              {"plan", report.plan_name},
              {"params", report.params},
              {"grid", report.grid_desc},
              {"records", records},
              {"sup", report.empirical_sup},
              {"witness_x", report.sup_witness_x}};
    if (report.analytic_bound) {
        j["bound"] = *report.analytic_bound;
    } else {
        j["bound"] = nullptr;
    }
    return j;
}

std::string trace_csv(const EvacOutcome& outcome) {
    std::string out = "time,agent,event,position\n";
    for (const TraceEvent& e : outcome.trace) {
        out += format_double(e.time);
        out += ',';
        out += e.agent;
        out += ',';
        out += e.kind;
        out += ',';
        out += format_double(e.position);
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const CrReport& report) {
    std::string out = "x,evac_time,ratio\n";
    for (const CrRecord& r : report.records) {
        out += format_double(r.x);
        out += ',';
        out += format_double(r.evac_time);
        out += ',';
        out += format_double(r.ratio);
        out += '\n';
    }
    return out;
}

}  // namespace evacline
