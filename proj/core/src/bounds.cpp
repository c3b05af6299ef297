#include "evacline/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace evacline {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double knowledge_slack(double t) { return 1e-12 * std::max(1.0, t); }

/// Golden-section minimization of a unimodal function on (lo, hi).
template <typename F>
Optimum1D golden_section(F f, double lo, double hi, double tol) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    const double u = 0.5 * (a + b);
    return {u, f(u)};
}

}  // namespace

KnowledgeInterval direct_knowledge(const Trajectory& traj, double t) {
    if (t < 0.0) throw std::domain_error("direct_knowledge: negative time");
    double lo = 0.0, hi = 0.0;
    for (const TurningPoint& v : traj.vertices()) {
        if (v.time > t) break;
        lo = std::min(lo, v.position);
        hi = std::max(hi, v.position);
    }
    const double now = traj.position_at(t);
    lo = std::min(lo, now);
    hi = std::max(hi, now);
    return {lo, hi};
}

namespace {

/// Latest t' in [0, t] from which a visitor of trajectory Y could still
/// reach position `dest` by time t: the largest t' with
/// |dest - Y(t')| <= t - t'. The reach gap is non-decreasing in t' for
/// unit-speed paths, so this is a single forward sweep.
double latest_relayable_time(const Trajectory& y, double dest, double t) {
    const double slack = knowledge_slack(t);
    auto gap = [&](double tp) { return std::abs(dest - y.position_at(tp)) - (t - tp); };

    if (gap(t) <= slack) return t;
    if (gap(0.0) > slack) return 0.0;

    // Breakpoints: vertex times plus the co-location kinks where Y crosses
    // dest inside a segment.
    std::vector<double> breaks;
    breaks.push_back(0.0);
    const auto& verts = y.vertices();
    for (std::size_t i = 1; i < verts.size() && verts[i - 1].time < t; ++i) {
        const double t1 = std::min(verts[i].time, t);
        const double p0 = verts[i - 1].position;
        const double p1 = verts[i].position;
        if ((p0 - dest) * (p1 - dest) < 0.0) {
            const double w = (dest - p0) / (p1 - p0);
            const double tk = verts[i - 1].time + w * (verts[i].time - verts[i - 1].time);
            if (tk > 0.0 && tk < t) breaks.push_back(tk);
        }
        if (t1 > 0.0 && t1 < t) breaks.push_back(t1);
    }
    // A terminal extension can also cross dest past the last vertex.
    const TurningPoint& last = verts.back();
    if (last.time < t && y.terminal() == TerminalBehavior::ExtendLastVelocity) {
        const double v = y.velocity_after(last.time);
        if (v != 0.0) {
            const double tk = last.time + (dest - last.position) / v;
            if (tk > last.time && tk < t) breaks.push_back(tk);
        }
        if (last.time > 0.0) breaks.push_back(last.time);
    }
    breaks.push_back(t);
    std::sort(breaks.begin(), breaks.end());

    for (std::size_t i = 1; i < breaks.size(); ++i) {
        const double g0 = gap(breaks[i - 1]);
        const double g1 = gap(breaks[i]);
        if (g0 <= slack && g1 > slack) {
            const double w = (slack - g0) / (g1 - g0);
            return breaks[i - 1] + w * (breaks[i] - breaks[i - 1]);
        }
    }
    return t;
}

}  // namespace

KnowledgeInterval f2f_knowledge(std::span<const Trajectory> trajs, std::size_t idx, double t) {
    if (idx >= trajs.size()) throw std::invalid_argument("f2f_knowledge: bad trajectory index");
    if (t < 0.0) throw std::domain_error("f2f_knowledge: negative time");

    KnowledgeInterval k = direct_knowledge(trajs[idx], t);
    const double dest = trajs[idx].position_at(t);
    for (std::size_t j = 0; j < trajs.size(); ++j) {
        if (j == idx) continue;
        const double tau = latest_relayable_time(trajs[j], dest, t);
        const KnowledgeInterval relay = direct_knowledge(trajs[j], tau);
        k.lo = std::min(k.lo, relay.lo);
        k.hi = std::max(k.hi, relay.hi);
    }
    return k;
}

double cr_lb_from_knowledge(double position, double t, const KnowledgeInterval& K) {
    if (!(t > 0.0)) throw std::domain_error("cr_lb_from_knowledge: time must be positive");
    if (K.lo > 0.0 || K.hi < 0.0) {
        throw std::invalid_argument("cr_lb_from_knowledge: knowledge interval must contain 0");
    }
    double best = 1.0;
    if (std::isfinite(K.lo)) {
        if (K.lo == 0.0) return kInf;  // unknown targets arbitrarily close to the origin
        best = std::max(best, (std::abs(position - K.lo) + t) / std::abs(K.lo));
    }
    if (std::isfinite(K.hi)) {
        if (K.hi == 0.0) return kInf;
        best = std::max(best, (std::abs(position - K.hi) + t) / K.hi);
    }
    return best;
}

double lb_one_sender(double drift_all, double drift_sender) {
    if (!(drift_sender > 0.0) || drift_sender > 1.0) {
        throw std::domain_error("lb_one_sender: sender drift must lie in (0, 1]");
    }
    if (drift_all < drift_sender || drift_all > 1.0) {
        throw std::domain_error("lb_one_sender: overall drift must lie in [sender drift, 1]");
    }
    if (drift_sender == 1.0) return kInf;
    return 1.0 + (1.0 + drift_all) * (1.0 + drift_sender) /
                     (drift_all * (1.0 - drift_sender));
}

double lb_receiver(double drift_rest, double drift_receiver, double drift_sender) {
    if (!(drift_rest > 0.0) || drift_rest > 1.0) {
        throw std::domain_error("lb_receiver: drift of the remaining agents must lie in (0, 1]");
    }
    if (drift_receiver < 0.0 || drift_receiver > 1.0 || drift_sender < 0.0 ||
        drift_sender > 1.0) {
        throw std::domain_error("lb_receiver: drifts must lie in [0, 1]");
    }
    return 1.0 + (1.0 + drift_rest) * (1.0 + drift_receiver) /
                     (drift_rest * (1.0 + drift_sender));
}

Optimum1D minimize_lb_equal_drift() {
    auto g = [](double u) { return (1.0 + u) * (1.0 + u) / (u * (1.0 - u)); };
    return golden_section(g, 1e-9, 1.0 - 1e-9, 1e-10);
}

Optimum1D minimize_lb_pair() {
    auto h = [](double u) { return 1.0 / u + (1.0 + u) / (1.0 - u); };
    return golden_section(h, 1e-9, 1.0 - 1e-9, 1e-10);
}

Optimum1D solve_lb_one_many() {
    auto f = [](double u) { return u * u + 4.0 * u - 1.0; };
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    const double u = 0.5 * (lo + hi);
    return {u, 1.0 + 2.0 * (1.0 + u) / (1.0 - u)};
}

DriftProfile drift_profile(const EvacPlan& plan, double horizon, double tail_fraction) {
    DriftProfile profile;
    for (const AgentSpec& a : plan.agents) {
        const double mu = drift_estimate(a.baseline, horizon, tail_fraction);
        profile.per_agent[a.id] = mu;
        profile.overall = std::max(profile.overall, mu);
    }
    return profile;
}

}  // namespace evacline
