#include "evacline/plans.hpp"

#include <cmath>
#include <stdexcept>

#include "evacline/rays.hpp"

namespace evacline {

bool can_transmit_wireless(Capability c) {
    return c == Capability::Sender || c == Capability::Wireless;
}

bool can_receive_wireless(Capability c) {
    return c == Capability::Receiver || c == Capability::Wireless;
}

const AgentSpec* EvacPlan::find_agent(const std::string& id) const {
    for (const AgentSpec& a : agents) {
        if (a.id == id) return &a;
    }
    return nullptr;
}

namespace {

Trajectory constant_velocity(double v, TerminalBehavior term = TerminalBehavior::ExtendLastVelocity) {
    return Trajectory({{0.0, 0.0}, {v, 1.0}}, term);
}

Trajectory stationary() {
    return Trajectory({{0.0, 0.0}}, TerminalBehavior::HoldLastPosition);
}

}  // namespace

EvacPlan plan_one_one(double horizon) {
    const double sender_speed = std::sqrt(2.0) - 1.0;
    EvacPlan plan;
    plan.name = "one-one";
    plan.horizon = horizon;
    plan.params = {{"sender_speed", sender_speed}};
    plan.agents.push_back({"sender", Capability::Sender, constant_velocity(sender_speed),
                           ReactionPolicy::go_to_exit()});
    plan.agents.push_back({"receiver", Capability::Receiver, constant_velocity(-1.0),
                           ReactionPolicy::pursue_then_exit({"sender"})});
    return plan;
}

EvacPlan plan_one_many(int n_receivers, double horizon) {
    if (n_receivers < 2) {
        throw std::invalid_argument("plan_one_many: needs at least 2 receivers");
    }
    EvacPlan plan;
    plan.name = "one-many";
    plan.horizon = horizon;
    plan.params = {{"n_r", static_cast<double>(n_receivers)}};
    plan.agents.push_back(
        {"sender", Capability::Sender, stationary(), ReactionPolicy::go_to_exit()});
    plan.agents.push_back({"receiver-left", Capability::Receiver, constant_velocity(-1.0),
                           ReactionPolicy::pursue_then_exit({"sender"})});
    plan.agents.push_back({"receiver-right", Capability::Receiver, constant_velocity(1.0),
                           ReactionPolicy::pursue_then_exit({"sender"})});
    for (int i = 3; i <= n_receivers; ++i) {
        plan.agents.push_back({"receiver-" + std::to_string(i), Capability::Receiver,
                               stationary(), ReactionPolicy::go_to_exit()});
    }
    return plan;
}

RaysPlanParams rays_plan_params(double v_r) {
    if (!(v_r > 0.0) || !(v_r < 1.0)) {
        throw std::invalid_argument("rays_plan_params: v_r must lie in (0, 1)");
    }
    RaysPlanParams p;
    p.v0 = v_r * (3.0 - v_r) / (1.0 + v_r);
    p.v1 = v_r * (1.0 - v_r) / (1.0 + 3.0 * v_r);
    p.gamma_right = (3.0 - v_r) / (1.0 - v_r);
    p.gamma_left = p.gamma_right * (1.0 + v_r) / (1.0 - v_r);
    return p;
}

EvacPlan plan_evac_rays(double v_r, int n_senders, int k_max) {
    if (n_senders < 2) {
        throw std::invalid_argument("plan_evac_rays: needs at least 2 senders");
    }
    if (k_max < 1) throw std::invalid_argument("plan_evac_rays: k_max must be >= 1");
    const RaysPlanParams rp = rays_plan_params(v_r);
    const double horizon = receiver_turn_time(v_r, 2 * k_max + 3);

    EvacPlan plan;
    plan.name = "rays";
    plan.horizon = horizon;
    plan.params = {{"v_r", v_r},
                   {"v0", rp.v0},
                   {"v1", rp.v1},
                   {"gamma_right", rp.gamma_right},
                   {"gamma_left", rp.gamma_left},
                   {"n_s", static_cast<double>(n_senders)},
                   {"k_max", static_cast<double>(k_max)}};

    Trajectory right = right_sender_trajectory(v_r, horizon);
    Trajectory left = left_sender_trajectory(v_r, horizon);
    Trajectory recv = receiver_trajectory(v_r, horizon);

    plan.agents.push_back({"sender-right", Capability::Sender, std::move(right),
                           ReactionPolicy::go_to_exit()});
    plan.agents.push_back({"sender-left", Capability::Sender, std::move(left),
                           ReactionPolicy::go_to_exit()});
    plan.agents.push_back({"receiver", Capability::Receiver, std::move(recv),
                           ReactionPolicy::pursue_then_exit({"sender-right", "sender-left"})});
    for (int i = 3; i <= n_senders; ++i) {
        plan.agents.push_back({"sender-" + std::to_string(i), Capability::Sender, stationary(),
                               ReactionPolicy::go_to_exit()});
    }
    return plan;
}

}  // namespace evacline
