#include "evacline/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "evacline/rays.hpp"

namespace evacline {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// One linear piece of a path: position p0 at t0, p1 at t1 (t0 < t1).
struct Piece {
    double t0, t1, p0, p1;

    double velocity() const { return (p1 - p0) / (t1 - t0); }
    double at(double t) const { return p0 + (t - t0) * velocity(); }
};

/// Linear pieces of a vertex list over [from, to], applying the terminal
/// behavior past the last vertex.
std::vector<Piece> pieces_of(const std::vector<TurningPoint>& verts, TerminalBehavior term,
                             double from, double to) {
    std::vector<Piece> out;
    if (to <= from) return out;
    for (std::size_t i = 1; i < verts.size(); ++i) {
        const double t0 = verts[i - 1].time;
        const double t1 = verts[i].time;
        if (t1 <= from || t0 >= to) continue;
        out.push_back({t0, t1, verts[i - 1].position, verts[i].position});
    }
    const TurningPoint& last = verts.back();
    if (last.time < to) {
        double v = 0.0;
        if (term == TerminalBehavior::ExtendLastVelocity && verts.size() > 1) {
            const TurningPoint& prev = verts[verts.size() - 2];
            v = (last.position - prev.position) / (last.time - prev.time);
        }
        out.push_back({last.time, to, last.position, last.position + v * (to - last.time)});
    }
    return out;
}

double eval_path(const std::vector<TurningPoint>& verts, TerminalBehavior term, double t) {
    const TurningPoint& last = verts.back();
    if (t >= last.time) {
        if (term == TerminalBehavior::HoldLastPosition || verts.size() == 1) return last.position;
        const TurningPoint& prev = verts[verts.size() - 2];
        const double v = (last.position - prev.position) / (last.time - prev.time);
        return last.position + v * (t - last.time);
    }
    auto it = std::upper_bound(verts.begin(), verts.end(), t,
                               [](double value, const TurningPoint& v) { return value < v.time; });
    if (it == verts.begin()) return verts.front().position;
    const TurningPoint& b = *it;
    const TurningPoint& a = *(it - 1);
    return a.position + (t - a.time) / (b.time - a.time) * (b.position - a.position);
}

/// Earliest t in [a, b] with |alpha + beta t| <= eps0 + eps1 t, or nullopt.
std::optional<double> earliest_contact(double alpha, double beta, double eps0, double eps1,
                                       double a, double b) {
    // Two linear constraints: f1 = (alpha-eps0) + (beta-eps1) t <= 0 and
    // f2 = (-alpha-eps0) + (-beta-eps1) t <= 0. Each admits a half-line.
    double lo = a, hi = b;
    const double c1[2] = {alpha - eps0, beta - eps1};
    const double c2[2] = {-alpha - eps0, -beta - eps1};
    for (const double* c : {c1, c2}) {
        const double f_const = c[0];
        const double slope = c[1];
        if (slope == 0.0) {
            if (f_const > 0.0) return std::nullopt;
            continue;
        }
        const double root = -f_const / slope;
        if (slope > 0.0) {
            hi = std::min(hi, root);
        } else {
            lo = std::max(lo, root);
        }
    }
    if (lo <= hi) return lo;
    return std::nullopt;
}

}  // namespace

double coincidence_tol(double t) {
    return 1e-9 + 1e-12 * std::max(t, 0.0);
}

std::optional<double> first_passage(const Trajectory& traj, double x, double horizon) {
    for (const Piece& seg : pieces_of(traj.vertices(), traj.terminal(), 0.0, horizon)) {
        const double lo = std::min(seg.p0, seg.p1);
        const double hi = std::max(seg.p0, seg.p1);
        if (x < lo || x > hi) continue;
        if (seg.p0 == seg.p1) return seg.t0;  // stationary piece sitting on x
        const double t = seg.t0 + (x - seg.p0) / seg.velocity();
        if (t <= horizon) return t;
    }
    return std::nullopt;
}

std::optional<std::pair<double, double>> intercept(double start_pos, double start_time,
                                                   const Trajectory& quarry, double horizon) {
    if (start_time < 0.0) throw std::domain_error("intercept: negative start time");
    for (const Piece& seg :
         pieces_of(quarry.vertices(), quarry.terminal(), start_time, horizon)) {
        const double a = std::max(seg.t0, start_time);
        const double b = seg.t1;
        if (b < a) continue;
        // d(t) = quarry(t) - start_pos; reachability gap g = |d| - (t - start_time)
        // must drop to (tolerance); solved as |d(t)| <= (t - start_time) + tol(t).
        const double v = seg.velocity();
        const double alpha = (seg.p0 - v * seg.t0) - start_pos;
        const double beta = v;
        // budget(t) = (t - start_time) + coincidence_tol(t)
        const double eps0 = -start_time + 1e-9;
        const double eps1 = 1.0 + 1e-12;
        if (auto t = earliest_contact(alpha, beta, eps0, eps1, a, b)) {
            return std::make_pair(*t, seg.at(*t));
        }
    }
    return std::nullopt;
}

namespace {

struct AgentRt {
    const AgentSpec* spec = nullptr;
    std::vector<TurningPoint> route;
    TerminalBehavior term = TerminalBehavior::HoldLastPosition;
    bool informed = false;
    bool route_final = false;
    double notify = kInf;
    double arrival = kInf;
    std::vector<std::string> pending;  // remaining pursuit targets
};

class Simulation {
  public:
    Simulation(const EvacPlan& plan, double x) : plan_(plan), x_(x) {
        for (const AgentSpec& a : plan.agents) {
            AgentRt rt;
            rt.spec = &a;
            rt.route = a.baseline.vertices();
            rt.term = a.baseline.terminal();
            agents_.push_back(std::move(rt));
        }
    }

    EvacOutcome run() {
        discover();
        closure(t_now_);
        replan(t_now_);
        while (!all_informed()) {
            const double t_next = next_contact_time();
            if (!(t_next > t_now_) || t_next > plan_.horizon) {
                throw std::runtime_error("simulate: notification did not complete within horizon");
            }
            t_now_ = t_next;
            closure(t_now_);
            replan(t_now_);
        }
        return finish();
    }

  private:
    double pos_of(const AgentRt& a, double t) const { return eval_path(a.route, a.term, t); }

    bool all_informed() const {
        return std::all_of(agents_.begin(), agents_.end(),
                           [](const AgentRt& a) { return a.informed; });
    }

    AgentRt* by_id(const std::string& id) {
        for (AgentRt& a : agents_) {
            if (a.spec->id == id) return &a;
        }
        return nullptr;
    }

    void discover() {
        double best = kInf;
        std::size_t who = agents_.size();
        for (std::size_t i = 0; i < agents_.size(); ++i) {
            auto t = first_passage(agents_[i].spec->baseline, x_, plan_.horizon);
            if (t && *t < best) {
                best = *t;
                who = i;
            }
        }
        if (who == agents_.size()) {
            throw std::runtime_error("simulate: no agent reaches the target within the horizon");
        }
        t_now_ = best;
        discovery_time_ = best;
        finder_ = agents_[who].spec->id;
        inform(agents_[who], best, "discovery");
    }

    void inform(AgentRt& a, double t, const std::string& kind) {
        a.informed = true;
        a.notify = t;
        trace_.push_back({t, a.spec->id, kind, pos_of(a, t)});
        switch (a.spec->reaction.kind) {
            case ReactionPolicy::Kind::GoToExit:
                truncate(a, t);
                exit_leg(a, t);
                break;
            case ReactionPolicy::Kind::PursueThenExit:
                truncate(a, t);
                a.pending = a.spec->reaction.pursue_ids;
                break;
            case ReactionPolicy::Kind::FollowBaseline:
                a.route_final = true;  // keeps its assigned path
                break;
        }
    }

    void truncate(AgentRt& a, double t) {
        const double p = pos_of(a, t);
        while (a.route.size() > 1 && a.route.back().time > t) a.route.pop_back();
        if (a.route.back().time < t) a.route.push_back({p, t});
        a.term = TerminalBehavior::HoldLastPosition;
    }

    void exit_leg(AgentRt& a, double t) {
        const double p = a.route.back().position;
        const double d = std::abs(x_ - p);
        const double arrive = t + d;
        if (arrive > t) a.route.push_back({x_, arrive});  // skip sub-ULP dashes
        a.arrival = arrive;
        a.route_final = true;
    }

    // Wireless then face-to-face propagation, repeated to a fixed point
    // within the instant t.
    void closure(double t) {
        bool changed = true;
        while (changed) {
            changed = false;
            bool transmitter_informed = false;
            for (const AgentRt& a : agents_) {
                if (a.informed && can_transmit_wireless(a.spec->capability)) {
                    transmitter_informed = true;
                    break;
                }
            }
            if (transmitter_informed) {
                for (AgentRt& a : agents_) {
                    if (!a.informed && can_receive_wireless(a.spec->capability)) {
                        inform(a, t, "wireless");
                        changed = true;
                    }
                }
            }
            for (AgentRt& u : agents_) {
                if (u.informed) continue;
                const double pu = pos_of(u, t);
                for (const AgentRt& i : agents_) {
                    if (!i.informed) continue;
                    // Looser than the contact scan's threshold: a reported
                    // contact sits exactly on that boundary, and rounding
                    // must not be able to flip it back out.
                    if (std::abs(pos_of(i, t) - pu) <= 2.0 * coincidence_tol(t)) {
                        inform(u, t, "f2f");
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    // Re-derives every pursuer's next leg from its current position: drops
    // quarries that are informed by now, chases the earliest-interceptable
    // of the rest, and heads for the exit once none remain.
    void replan(double t) {
        for (AgentRt& a : agents_) {
            if (!a.informed || a.route_final) continue;
            if (a.spec->reaction.kind != ReactionPolicy::Kind::PursueThenExit) continue;
            std::erase_if(a.pending, [&](const std::string& id) {
                AgentRt* q = by_id(id);
                return q == nullptr || q->informed;
            });
            truncate(a, t);
            if (a.pending.empty()) {
                exit_leg(a, t);
                continue;
            }
            const double p = a.route.back().position;
            double best_t = kInf;
            double best_p = 0.0;
            for (const std::string& id : a.pending) {
                AgentRt* q = by_id(id);
                Trajectory quarry(q->route, q->term);
                if (auto hit = intercept(p, t, quarry, plan_.horizon)) {
                    if (hit->first < best_t) {
                        best_t = hit->first;
                        best_p = hit->second;
                    }
                }
            }
            if (best_t == kInf) {
                throw std::runtime_error("simulate: pursuit target unreachable within horizon");
            }
            // The interception root carries the co-location tolerance, so the
            // raw leg could nominally exceed unit speed by a sliver. Stretch
            // the leg time to an exact unit-speed dash; the contact scan still
            // fires within tolerance of the true meet.
            const double leg_t = std::max(best_t, t + std::abs(best_p - p));
            if (leg_t > t) a.route.push_back({best_p, leg_t});
        }
    }

    // Earliest future co-location between an informed and an uninformed
    // agent, over each agent's currently committed path.
    double next_contact_time() const {
        double best = kInf;
        for (const AgentRt& i : agents_) {
            if (!i.informed) continue;
            // A pursuer's path is committed only up to its next meet; an
            // exit-bound or baseline-following agent is committed forever.
            const double i_end = i.route_final ? plan_.horizon : i.route.back().time;
            for (const AgentRt& u : agents_) {
                if (u.informed) continue;
                const double window_end = std::min(plan_.horizon, i_end);
                auto pieces_i = pieces_of(i.route, i.term, t_now_, window_end);
                auto pieces_u = pieces_of(u.route, u.term, t_now_, window_end);
                for (const Piece& pi : pieces_i) {
                    for (const Piece& pu : pieces_u) {
                        const double a = std::max({pi.t0, pu.t0, t_now_});
                        const double b = std::min(pi.t1, pu.t1);
                        if (b <= a) continue;
                        const double vi = pi.velocity();
                        const double vu = pu.velocity();
                        const double alpha =
                            (pi.p0 - vi * pi.t0) - (pu.p0 - vu * pu.t0);
                        const double beta = vi - vu;
                        auto hit = earliest_contact(alpha, beta, 1e-9, 1e-12, a, b);
                        if (hit && *hit > t_now_ && *hit < best) best = *hit;
                    }
                }
            }
        }
        return best;
    }

    EvacOutcome finish() {
        EvacOutcome out;
        out.target = x_;
        out.finder_id = finder_;
        out.discovery_time = discovery_time_;
        double evac = 0.0;
        for (AgentRt& a : agents_) {
            if (a.spec->reaction.kind == ReactionPolicy::Kind::FollowBaseline) {
                a.arrival = kInf;
                for (const Piece& seg : pieces_of(a.spec->baseline.vertices(),
                                                  a.spec->baseline.terminal(), a.notify,
                                                  plan_.horizon)) {
                    const double lo = std::min(seg.p0, seg.p1);
                    const double hi = std::max(seg.p0, seg.p1);
                    if (x_ < lo || x_ > hi) continue;
                    const double t =
                        seg.p0 == seg.p1 ? seg.t0 : seg.t0 + (x_ - seg.p0) / seg.velocity();
                    if (t >= a.notify) {
                        a.arrival = t;
                        break;
                    }
                }
                if (a.arrival == kInf) {
                    throw std::runtime_error(
                        "simulate: baseline-following agent never reaches target");
                }
            }
            out.notify_time[a.spec->id] = a.notify;
            out.arrival_time[a.spec->id] = a.arrival;
            evac = std::max(evac, a.arrival);
            trace_.push_back({a.arrival, a.spec->id, "arrival", x_});
            out.realized_paths.emplace(a.spec->id, Trajectory(a.route, a.term));
        }
        out.evac_time = evac;
        if (evac > plan_.horizon) {
            throw std::runtime_error("simulate: evacuation exceeds the plan horizon");
        }
        std::stable_sort(trace_.begin(), trace_.end(),
                         [](const TraceEvent& a, const TraceEvent& b) { return a.time < b.time; });
        out.trace = std::move(trace_);
        return out;
    }

    const EvacPlan& plan_;
    double x_;
    std::vector<AgentRt> agents_;
    std::vector<TraceEvent> trace_;
    double t_now_ = 0.0;
    double discovery_time_ = 0.0;
    std::string finder_;
};

}  // namespace

EvacOutcome simulate(const EvacPlan& plan, double x) {
    if (std::abs(x) < 1.0) throw std::domain_error("target must satisfy |x| >= 1");
    if (plan.agents.empty()) throw std::invalid_argument("simulate: plan has no agents");
    for (const AgentSpec& a : plan.agents) {
        if (a.reaction.kind != ReactionPolicy::Kind::PursueThenExit) continue;
        // Pursuit is for agents nobody can reach wirelessly; anyone else is
        // notified by broadcast the moment a sender learns the target.
        for (const std::string& id : a.reaction.pursue_ids) {
            const AgentSpec* q = plan.find_agent(id);
            if (q == nullptr) {
                throw std::invalid_argument("simulate: pursue target '" + id + "' not in plan");
            }
            if (can_receive_wireless(q->capability)) {
                throw std::invalid_argument("simulate: pursue target '" + id +
                                            "' is wirelessly reachable");
            }
        }
    }
    Simulation sim(plan, x);
    return sim.run();
}

namespace {

// Regime boundaries through the same closed forms the plans use, so a
// target sitting exactly on a boundary classifies consistently with the
// simulated discovery segment.
double right_even_position(double v_r, int k) {
    return right_sender_turning_point(v_r, 2 * k).position;
}

double left_even_distance(double v_r, int k) {
    return -left_sender_turning_point(v_r, 2 * k).position;
}

}  // namespace

double rays_analytic_evac_time(double v_r, double x) {
    if (!(v_r > 0.0) || !(v_r < 1.0)) {
        throw std::domain_error("rays_analytic_evac_time: v_r must lie in (0, 1)");
    }
    if (std::abs(x) < 1.0) throw std::domain_error("target must satisfy |x| >= 1");

    const double case1_coeff = (1.0 + 4.0 * v_r - v_r * v_r) / (1.0 + v_r);
    const double case2_coeff = (1.0 - v_r * (2.0 + 3.0 * v_r)) / (1.0 + v_r);
    constexpr int kMaxRegime = 256;

    if (x > 0.0) {
        if (x <= right_even_position(v_r, 0)) {
            throw std::domain_error("rays_analytic_evac_time: target below the covered regimes");
        }
        for (int k = 0; k < kMaxRegime; ++k) {
            const double upper = right_even_position(v_r, k + 1);
            if (!std::isfinite(upper)) break;
            if (x > upper) continue;
            const double t_star = x + (1.0 + v_r) * receiver_turn_time(v_r, 2 * k + 1);
            const double tr_next = receiver_turn_time(v_r, 2 * k + 2);
            const double left_turn = (1.0 + 3.0 * v_r) / (1.0 + v_r) * tr_next;
            if (t_star <= left_turn) return x + case1_coeff * tr_next;
            return 3.0 * x + case2_coeff * tr_next;
        }
    } else {
        const double ax = -x;
        if (ax <= left_even_distance(v_r, 0)) {
            throw std::domain_error("rays_analytic_evac_time: target below the covered regimes");
        }
        for (int k = 0; k < kMaxRegime; ++k) {
            const double upper = left_even_distance(v_r, k + 1);
            if (!std::isfinite(upper)) break;
            if (ax > upper) continue;
            const double t_star = ax + (1.0 + v_r) * receiver_turn_time(v_r, 2 * k + 2);
            const double tr_next = receiver_turn_time(v_r, 2 * k + 3);
            const double right_turn = (1.0 + 3.0 * v_r) / (1.0 + v_r) * tr_next;
            if (t_star <= right_turn) return ax + case1_coeff * tr_next;
            return 3.0 * ax + case2_coeff * tr_next;
        }
    }
    throw std::domain_error("rays_analytic_evac_time: target beyond tabulated regimes");
}

double analytic_evac_time(const EvacPlan& plan, double x) {
    if (std::abs(x) < 1.0) throw std::domain_error("target must satisfy |x| >= 1");
    if (plan.name == "one-one") {
        return (3.0 + 2.0 * std::sqrt(2.0)) * std::abs(x);
    }
    if (plan.name == "one-many") {
        return 5.0 * std::abs(x);
    }
    if (plan.name == "rays") {
        return rays_analytic_evac_time(plan.params.at("v_r"), x);
    }
    throw std::invalid_argument("analytic_evac_time: unknown plan " + plan.name);
}

}  // namespace evacline
