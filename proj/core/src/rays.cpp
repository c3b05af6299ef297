#include "evacline/rays.hpp"

#include <stdexcept>

#include "evacline/detail/quad.hpp"

namespace evacline {

void RaysParams::validate() const {
    if (side != 1 && side != -1) {
        throw std::invalid_argument("rays: side must be +1 or -1");
    }
    if (!(drift_speed > 0.0) || !(drift_speed < 1.0)) {
        throw std::invalid_argument("rays: drift_speed must lie in (0, 1)");
    }
    if (!(return_speed >= -1.0) || !(return_speed < drift_speed) || return_speed == 0.0) {
        throw std::invalid_argument(
            "rays: return_speed must be nonzero and lie in [-1, drift_speed)");
    }
    if (!(start_offset > 0.0)) {
        throw std::invalid_argument("rays: start_offset must be positive");
    }
}

namespace {

// Narrow quad vertices to doubles, dropping any vertex whose rounded time
// does not advance (a truncation point can land within one ULP of the
// preceding turning point).
std::vector<TurningPoint> narrow_polyline(const std::vector<quad::Point>& pts) {
    std::vector<TurningPoint> verts;
    verts.reserve(pts.size());
    for (const auto& q : pts) {
        TurningPoint v{static_cast<double>(q.position), static_cast<double>(q.time)};
        if (!verts.empty() && v.time <= verts.back().time) continue;
        verts.push_back(v);
    }
    return verts;
}

}  // namespace

std::vector<TurningPoint> rays_turning_points(const RaysParams& p, int j_max) {
    p.validate();
    if (j_max < 0) throw std::invalid_argument("rays_turning_points: j_max must be >= 0");
    auto pts = quad::rays_turning_points(p.side, p.drift_speed, p.return_speed,
                                         p.start_offset, j_max);
    std::vector<TurningPoint> out;
    out.reserve(pts.size());
    for (const auto& q : pts) {
        out.push_back({static_cast<double>(q.position), static_cast<double>(q.time)});
    }
    return out;
}

Trajectory rays_trajectory(const RaysParams& p, double horizon) {
    p.validate();
    if (!(horizon > 0.0)) throw std::invalid_argument("rays_trajectory: horizon must be positive");
    auto pts = quad::rays_polyline(p.side, p.drift_speed, p.return_speed, p.start_offset,
                                   horizon);
    return Trajectory(narrow_polyline(pts), TerminalBehavior::HoldLastPosition);
}

namespace {

void check_receiver_speed(double v_r) {
    if (!(v_r > 0.0) || !(v_r < 1.0)) {
        throw std::invalid_argument("receiver speed must lie in (0, 1)");
    }
}

TurningPoint narrow(quad::Point p) {
    return {static_cast<double>(p.position), static_cast<double>(p.time)};
}

}  // namespace

TurningPoint receiver_turning_point(double v_r, int j) {
    check_receiver_speed(v_r);
    if (j < 0) throw std::invalid_argument("turning-point index must be >= 0");
    return narrow(quad::receiver_turning_point(v_r, j));
}

TurningPoint right_sender_turning_point(double v_r, int j) {
    check_receiver_speed(v_r);
    if (j < 0) throw std::invalid_argument("turning-point index must be >= 0");
    return narrow(quad::right_sender_turning_point(v_r, j));
}

TurningPoint left_sender_turning_point(double v_r, int j) {
    check_receiver_speed(v_r);
    if (j < 0) throw std::invalid_argument("turning-point index must be >= 0");
    return narrow(quad::left_sender_turning_point(v_r, j));
}

double receiver_turn_time(double v_r, int j) {
    check_receiver_speed(v_r);
    if (j < 0) throw std::invalid_argument("turning-point index must be >= 0");
    return static_cast<double>(quad::receiver_turn_time(v_r, j));
}

namespace {

Trajectory plan_member_trajectory(quad::PlanPath which, double v_r, double horizon) {
    check_receiver_speed(v_r);
    if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
    auto pts = quad::plan_polyline_stepped(which, v_r, horizon);
    return Trajectory(narrow_polyline(pts), TerminalBehavior::HoldLastPosition);
}

}  // namespace

Trajectory receiver_trajectory(double v_r, double horizon) {
    return plan_member_trajectory(quad::PlanPath::Receiver, v_r, horizon);
}

Trajectory right_sender_trajectory(double v_r, double horizon) {
    return plan_member_trajectory(quad::PlanPath::RightSender, v_r, horizon);
}

Trajectory left_sender_trajectory(double v_r, double horizon) {
    return plan_member_trajectory(quad::PlanPath::LeftSender, v_r, horizon);
}

}  // namespace evacline
