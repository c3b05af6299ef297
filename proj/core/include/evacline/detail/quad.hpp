#pragma once

#include <span>
#include <vector>

namespace evacline::quad {

// Quad-precision scalar used for the rays geometry. Turning-point magnitudes
// grow geometrically with the bounce index, and the cross-checks between the
// closed forms and the stepwise construction are specified as absolute
// tolerances; computing both routes in quad precision and rounding once keeps
// the double results bit-identical instead of drifting apart by ULPs.
using Real = __float128;

struct Point {
    Real position;
    Real time;
};

inline Real qabs(Real x) { return x < 0 ? -x : x; }

/// Closed-form turning points of the two-ray bounce trajectory
/// (side, v0, v1, gamma), j = 0..j_max.
std::vector<Point> rays_turning_points(int side, Real v0, Real v1, Real gamma, int j_max);

/// Stepwise construction of the same trajectory: initial dash to
/// side*gamma, wait until gamma/v0, then alternate segment/ray
/// intersections, truncated at the horizon. Vertex list starts at (0, 0).
std::vector<Point> rays_polyline(int side, Real v0, Real v1, Real gamma, Real horizon);

/// Linear interpolation over a quad-precision vertex list; holds the last
/// position beyond the final vertex.
Real polyline_position(std::span<const Point> vertices, Real t);

// Turning points of the three search trajectories used by the two-sender,
// one-receiver evacuation plan, as functions of the receiver speed v_r.
Point receiver_turning_point(Real v_r, int j);
Point right_sender_turning_point(Real v_r, int j);
Point left_sender_turning_point(Real v_r, int j);

/// Receiver turn time ((1+v_r)/(1-v_r))^j / v_r.
Real receiver_turn_time(Real v_r, int j);

/// Full polyline (origin, dash, wait end, turning points 1..j_max) for one
/// of the plan trajectories, in quad precision, from the closed forms.
enum class PlanPath { Receiver, RightSender, LeftSender };
std::vector<Point> plan_polyline(PlanPath which, Real v_r, int j_max);

/// Same trajectory built by stepwise ray intersection, with the bounce
/// parameters derived from v_r at quad precision.
std::vector<Point> plan_polyline_stepped(PlanPath which, Real v_r, Real horizon);

}  // namespace evacline::quad
