#pragma once

#include <map>
#include <span>
#include <string>

#include "evacline/plans.hpp"
#include "evacline/trajectory.hpp"

namespace evacline {

/// Interval hull of a knowledge set. All agents start at the origin, so a
/// valid interval always contains 0.
struct KnowledgeInterval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(const KnowledgeInterval& other) const {
        return lo <= other.lo && other.hi <= hi;
    }
};

/// Locations the agent has visited by time t: [min X(s), max X(s)] over
/// s in [0, t].
KnowledgeInterval direct_knowledge(const Trajectory& traj, double t);

/// Total single-hop knowledge of agent idx at time t when it can only be
/// told things face-to-face: its own visited range, plus every location x
/// some other path Y visits at a time t' <= t from which the visitor could
/// still reach agent idx's position by time t (|X(t) - x| <= t - t').
KnowledgeInterval f2f_knowledge(std::span<const Trajectory> trajs, std::size_t idx,
                                double t);

/// Competitive-ratio lower bound from one agent's knowledge interval at
/// time t: the supremum of (|position - x| + t)/|x| over x outside K,
/// attained in the limit at the interval boundaries. Returns +infinity when
/// a boundary sits at 0 (targets arbitrarily close to the origin stay
/// unknown), and 1 when both boundaries are infinite.
double cr_lb_from_knowledge(double position, double t, const KnowledgeInterval& K);

/// Lower bound for one sender among the agents:
/// 1 + (1+drift_all)(1+drift_sender) / (drift_all (1-drift_sender)).
/// A sender that drifts at full speed makes the ratio unbounded
/// (+infinity).
double lb_one_sender(double drift_all, double drift_sender);

/// Lower bound from the fastest receiver's knowledge:
/// 1 + (1+drift_rest)(1+drift_receiver) / (drift_rest (1+drift_sender)),
/// where drift_rest is the largest drift among the other agents.
double lb_receiver(double drift_rest, double drift_receiver, double drift_sender);

struct Optimum1D {
    double u;
    double value;
};

/// Minimum of (1+u)^2 / (u(1-u)) on (0, 1): (1/3, 8). Adding 1 gives the
/// all-face-to-face bound 9.
Optimum1D minimize_lb_equal_drift();

/// Minimum of 1/u + (1+u)/(1-u) on (0, 1): (sqrt(2)-1, 2+2sqrt(2)). Adding
/// 1 gives the one-sender-one-receiver bound 3+2sqrt(2).
Optimum1D minimize_lb_pair();

/// Root of u^2 + 4u - 1 in (0, 1) and the resulting one-sender,
/// many-receivers bound: (sqrt(5)-2, 2+sqrt(5)).
Optimum1D solve_lb_one_many();

/// Drift estimates for every agent baseline of a plan, and their maximum.
struct DriftProfile {
    std::map<std::string, double> per_agent;
    double overall = 0.0;
};
DriftProfile drift_profile(const EvacPlan& plan, double horizon, double tail_fraction);

}  // namespace evacline
