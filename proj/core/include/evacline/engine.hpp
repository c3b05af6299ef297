#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evacline/plans.hpp"
#include "evacline/trajectory.hpp"

namespace evacline {

/// Position tolerance for treating two agents as co-located at time t.
/// The absolute floor matches the event-coincidence epsilon; the relative
/// term absorbs the rounding of stored vertices at large turn indices,
/// where co-moving paths reconstructed from doubles differ by a few ULPs.
double coincidence_tol(double t);

struct TraceEvent {
    double time;
    std::string agent;
    std::string kind;  // discovery | wireless | f2f | arrival
    double position;
};

/// Result of simulating one plan against one target.
struct EvacOutcome {
    double target = 0.0;
    std::string finder_id;
    double discovery_time = 0.0;
    std::map<std::string, double> notify_time;
    std::map<std::string, double> arrival_time;
    double evac_time = 0.0;
    std::vector<TraceEvent> trace;
    std::map<std::string, Trajectory> realized_paths;
};

/// Least t <= horizon with position_at(traj, t) == x, solved segment by
/// segment; nullopt when the path never reaches x in time.
std::optional<double> first_passage(const Trajectory& traj, double x,
                                    double horizon);

/// Earliest unit-speed interception of a known path: the least
/// t >= start_time with |quarry(t) - start_pos| <= t - start_time, and the
/// meeting position. nullopt when no interception exists by the horizon.
std::optional<std::pair<double, double>> intercept(double start_pos, double start_time,
                                                   const Trajectory& quarry, double horizon);

/// Event-driven evacuation: discovery, instant wireless broadcast to every
/// wireless-capable listener, face-to-face propagation on co-location
/// (including crossings along the way), reactions, and arrivals.
/// Requires |x| >= 1 and a plan whose horizon covers the run.
EvacOutcome simulate(const EvacPlan& plan, double x);

/// Closed-form evacuation time for the named plans. For the rays plan the
/// target must lie in a covered regime (beyond the first sender turning
/// point on its side); other positions throw std::domain_error.
double analytic_evac_time(const EvacPlan& plan, double x);

/// Closed-form evacuation time of the rays plan alone.
double rays_analytic_evac_time(double v_r, double x);

}  // namespace evacline
