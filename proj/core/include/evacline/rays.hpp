#pragma once

#include <vector>

#include "evacline/trajectory.hpp"

namespace evacline {

/// Parameters of the two-ray bounce family. The path dashes to
/// side*start_offset, waits until start_offset/drift_speed, then bounces
/// between the space-time rays x = side*drift_speed*t (outer) and
/// x = side*return_speed*t (inner), always at unit speed.
struct RaysParams {
    int side = 1;               // +1 drifts right, -1 drifts left
    double drift_speed = 0.0;   // slope of the outer ray, in (0, 1)
    double return_speed = 0.0;  // slope of the inner ray, in [-1, drift_speed), nonzero
    double start_offset = 0.0;  // first outer-ray position, > 0

    /// Throws std::invalid_argument when the closed forms are singular
    /// (drift_speed outside (0,1), return_speed zero or outside
    /// [-1, drift_speed), start_offset <= 0).
    void validate() const;
};

/// Closed-form turning points j = 0..j_max of the bounce family.
std::vector<TurningPoint> rays_turning_points(const RaysParams& p, int j_max);

/// Builds the trajectory by stepwise segment/ray intersection, truncated at
/// the horizon (a final interpolated vertex is emitted exactly at the
/// horizon when it falls mid-segment). Vertices coincide with
/// rays_turning_points where both are defined.
Trajectory rays_trajectory(const RaysParams& p, double horizon);

// Closed-form turning points of the evacuation plan's three searchers at
// receiver speed v_r in (0, 1).
TurningPoint receiver_turning_point(double v_r, int j);
TurningPoint right_sender_turning_point(double v_r, int j);
TurningPoint left_sender_turning_point(double v_r, int j);

// Stepwise trajectories of the same searchers, with the bounce parameters
// derived from v_r at full precision so the vertices land exactly on the
// closed forms.
Trajectory receiver_trajectory(double v_r, double horizon);
Trajectory right_sender_trajectory(double v_r, double horizon);
Trajectory left_sender_trajectory(double v_r, double horizon);

/// Receiver turn time ((1+v_r)/(1-v_r))^j / v_r.
double receiver_turn_time(double v_r, int j);

}  // namespace evacline
