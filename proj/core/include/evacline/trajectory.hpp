#pragma once

#include <span>
#include <vector>

namespace evacline {

/// A space-time vertex of a piecewise-linear agent path.
struct TurningPoint {
    double position = 0.0;
    double time = 0.0;
};

/// What a path does after its last stored vertex.
enum class TerminalBehavior {
    HoldLastPosition,
    ExtendLastVelocity,
};

/// Checks that a vertex list describes a feasible unit-speed path from the
/// origin: starts at (0, 0), times strictly increasing, and every segment
/// speed at most 1 (tolerance 1e-12 on the speed ratio).
bool validate_unit_speed(std::span<const TurningPoint> vertices);

/// Piecewise-linear, unit-speed-bounded path anchored at the origin.
///
/// Between consecutive vertices the position is linear in time; past the
/// last vertex the path either holds its position or continues with the
/// last segment's velocity. Construction rejects vertex lists that fail
/// validate_unit_speed.
class Trajectory {
  public:
    Trajectory(std::vector<TurningPoint> vertices, TerminalBehavior terminal);

    /// Position at time t >= 0. Throws std::domain_error for negative t.
    double position_at(double t) const;

    /// Velocity of the segment active just after time t (0 past the end of
    /// a hold-terminated path).
    double velocity_after(double t) const;

    const std::vector<TurningPoint>& vertices() const { return vertices_; }
    TerminalBehavior terminal() const { return terminal_; }

    /// Time of the last stored vertex.
    double end_time() const { return vertices_.back().time; }

  private:
    std::vector<TurningPoint> vertices_;
    TerminalBehavior terminal_;
};

inline bool validate_unit_speed(const Trajectory& traj) {
    return validate_unit_speed(traj.vertices());
}

/// Estimate of the long-run drift rate sup |X(t)|/t, taken over the window
/// [tail_fraction * horizon, horizon]. For piecewise-linear paths the
/// maximum over the window is attained at a vertex or a window endpoint,
/// so only those points are evaluated.
double drift_estimate(const Trajectory& traj, double horizon, double tail_fraction);

}  // namespace evacline
