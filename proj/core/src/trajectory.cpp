#include "evacline/trajectory.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <stdexcept>

namespace evacline {

namespace {
constexpr double kSpeedSlack = 1e-12;
}

bool validate_unit_speed(std::span<const TurningPoint> vertices) {
    if (vertices.empty()) return false;
    if (vertices.front().position != 0.0 || vertices.front().time != 0.0) return false;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        const double dt = vertices[i].time - vertices[i - 1].time;
        const double dp = std::abs(vertices[i].position - vertices[i - 1].position);
        if (dt <= 0.0) return false;
        // Stored coordinates are rounded doubles, so a short segment next to
        // a large vertex can overshoot the speed ratio by a few ULPs of the
        // coordinate scale; allow exactly that much and no more.
        const double scale = std::max({std::abs(vertices[i - 1].position),
                                       std::abs(vertices[i].position), vertices[i].time});
        const double ulp_slack = 8.0 * std::numeric_limits<double>::epsilon() * scale;
        if (dp - dt > kSpeedSlack * dt + ulp_slack) return false;
    }
    return true;
}

Trajectory::Trajectory(std::vector<TurningPoint> vertices, TerminalBehavior terminal)
    : vertices_(std::move(vertices)), terminal_(terminal) {
    if (!validate_unit_speed(vertices_)) {
        throw std::invalid_argument(
            "trajectory must start at (0,0) with strictly increasing times and "
            "segment speeds <= 1");
    }
}

double Trajectory::position_at(double t) const {
    if (t < 0.0) throw std::domain_error("position_at: negative time");
    if (t >= vertices_.back().time) {
        const TurningPoint& last = vertices_.back();
        if (terminal_ == TerminalBehavior::HoldLastPosition || vertices_.size() == 1) {
            return last.position;
        }
        return last.position + (t - last.time) * velocity_after(last.time);
    }
    // Find the segment containing t.
    auto it = std::upper_bound(vertices_.begin(), vertices_.end(), t,
                               [](double value, const TurningPoint& v) { return value < v.time; });
    const TurningPoint& b = *it;
    const TurningPoint& a = *(it - 1);
    const double w = (t - a.time) / (b.time - a.time);
    return a.position + w * (b.position - a.position);
}

double Trajectory::velocity_after(double t) const {
    if (t < 0.0) throw std::domain_error("velocity_after: negative time");
    if (vertices_.size() == 1) return 0.0;
    if (t >= vertices_.back().time) {
        if (terminal_ == TerminalBehavior::HoldLastPosition) return 0.0;
        const TurningPoint& a = vertices_[vertices_.size() - 2];
        const TurningPoint& b = vertices_.back();
        return (b.position - a.position) / (b.time - a.time);
    }
    auto it = std::upper_bound(vertices_.begin(), vertices_.end(), t,
                               [](double value, const TurningPoint& v) { return value < v.time; });
    const TurningPoint& b = *it;
    const TurningPoint& a = *(it - 1);
    return (b.position - a.position) / (b.time - a.time);
}

double drift_estimate(const Trajectory& traj, double horizon, double tail_fraction) {
    if (horizon <= 0.0) throw std::domain_error("drift_estimate: horizon must be positive");
    if (tail_fraction <= 0.0 || tail_fraction >= 1.0) {
        throw std::domain_error("drift_estimate: tail_fraction must be in (0, 1)");
    }
    const double t0 = tail_fraction * horizon;
    double best = std::abs(traj.position_at(t0)) / t0;
    best = std::max(best, std::abs(traj.position_at(horizon)) / horizon);
    for (const TurningPoint& v : traj.vertices()) {
        if (v.time > t0 && v.time < horizon) {
            best = std::max(best, std::abs(v.position) / v.time);
        }
    }
    return best;
}

}  // namespace evacline
