#pragma once

#include <map>
#include <string>
#include <vector>

#include "evacline/trajectory.hpp"

namespace evacline {

/// Wireless role of an agent. Everyone can talk face-to-face; senders
/// additionally transmit (but not receive) wirelessly, receivers receive
/// (but not transmit) wirelessly, and wireless agents do both.
enum class Capability {
    Sender,
    Receiver,
    Wireless,
};

bool can_transmit_wireless(Capability c);
bool can_receive_wireless(Capability c);

/// What an agent does once it learns the target location (by finding it
/// itself or by being notified).
struct ReactionPolicy {
    enum class Kind {
        GoToExit,        // unit-speed straight to the target
        PursueThenExit,  // intercept listed agents that are still uninformed, then exit
        FollowBaseline,  // no deviation; keeps the assigned path
    };

    Kind kind = Kind::GoToExit;
    std::vector<std::string> pursue_ids;  // PursueThenExit only

    static ReactionPolicy go_to_exit() { return {Kind::GoToExit, {}}; }
    static ReactionPolicy pursue_then_exit(std::vector<std::string> ids) {
        return {Kind::PursueThenExit, std::move(ids)};
    }
    static ReactionPolicy follow_baseline() { return {Kind::FollowBaseline, {}}; }
};

struct AgentSpec {
    std::string id;
    Capability capability;
    Trajectory baseline;
    ReactionPolicy reaction;
};

/// A named evacuation algorithm: agents with assigned search paths and
/// reactions, plus the numeric parameters it was built from.
struct EvacPlan {
    std::string name;
    std::vector<AgentSpec> agents;
    std::map<std::string, double> params;
    double horizon = 0.0;

    const AgentSpec* find_agent(const std::string& id) const;
};

/// One sender, one receiver. The sender searches right at speed sqrt(2)-1,
/// the receiver searches left at unit speed.
EvacPlan plan_one_one(double horizon = 1e4);

/// One sender waiting at the origin, n_r >= 2 receivers: two receivers
/// search left/right at unit speed, the rest wait at the origin.
EvacPlan plan_one_many(int n_receivers, double horizon = 1e4);

/// Derived parameters of the two-sender, one-receiver rays plan.
struct RaysPlanParams {
    double v0;           // sender drift-ray slope
    double v1;           // sender return-ray slope
    double gamma_right;  // right-sender start offset
    double gamma_left;   // left-sender start offset
};
RaysPlanParams rays_plan_params(double v_r);

/// Two bouncing senders (right/left) and one bouncing receiver; extra
/// senders wait at the origin. Baselines cover targets up to the
/// right-sender turning point 2*k_max; the horizon is the receiver turn
/// time 2*k_max + 3.
EvacPlan plan_evac_rays(double v_r, int n_senders = 2, int k_max = 12);

}  // namespace evacline
