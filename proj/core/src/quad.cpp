#include "evacline/detail/quad.hpp"

#include <stdexcept>

namespace evacline::quad {

std::vector<Point> rays_turning_points(int side, Real v0, Real v1, Real gamma, int j_max) {
    const Real one = 1;
    const Real ratio = ((one - v1) * (one + v0)) / ((one + v1) * (one - v0));
    const Real odd_pos = (v1 * (one + v0)) / (v0 * (one + v1));

    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(j_max) + 1);
    Real scale = gamma;  // gamma * ratio^(j/2), advanced every second index
    for (int j = 0; j <= j_max; ++j) {
        const bool even = (j % 2) == 0;
        const Real d = side * scale * (even ? one : odd_pos);
        const Real t = (d / side) * (even ? one / v0 : one / v1);
        out.push_back({d, t});
        if (!even) scale *= ratio;
    }
    return out;
}

std::vector<Point> rays_polyline(int side, Real v0, Real v1, Real gamma, Real horizon) {
    const Real one = 1;
    std::vector<Point> verts;
    verts.push_back({0, 0});

    // Initial dash to the start offset.
    if (horizon <= gamma) {
        verts.push_back({side * horizon, horizon});
        return verts;
    }
    verts.push_back({side * gamma, gamma});

    // Wait on the outer ray until gamma / v0.
    const Real wait_end = gamma / v0;
    if (horizon <= wait_end) {
        verts.push_back({side * gamma, horizon});
        return verts;
    }
    verts.push_back({side * gamma, wait_end});

    // Alternate between the inner ray x = v1 t and the outer ray x = v0 t,
    // working in the mirrored (side = +1) frame.
    Real p = gamma;
    Real t = wait_end;
    while (true) {
        // Inward segment: p - s meets v1 (t + s).
        Real s = (p - v1 * t) / (one + v1);
        Real t_next = t + s;
        if (t_next >= horizon) {
            verts.push_back({side * (p - (horizon - t)), horizon});
            return verts;
        }
        Real p_next = v1 * t_next;
        verts.push_back({side * p_next, t_next});

        // Outward segment: p_next + s meets v0 (t_next + s).
        s = (v0 * t_next - p_next) / (one - v0);
        Real t_out = t_next + s;
        if (t_out >= horizon) {
            verts.push_back({side * (p_next + (horizon - t_next)), horizon});
            return verts;
        }
        p = v0 * t_out;
        t = t_out;
        verts.push_back({side * p, t});
    }
}

Real polyline_position(std::span<const Point> vertices, Real t) {
    if (vertices.empty()) throw std::invalid_argument("polyline_position: empty vertex list");
    if (t <= vertices.front().time) return vertices.front().position;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        if (t <= vertices[i].time) {
            const Point& a = vertices[i - 1];
            const Point& b = vertices[i];
            const Real w = (t - a.time) / (b.time - a.time);
            return a.position + w * (b.position - a.position);
        }
    }
    return vertices.back().position;
}

namespace {

Real pow_int(Real base, int n) {
    Real out = 1;
    for (int i = 0; i < n; ++i) out *= base;
    return out;
}

}  // namespace

Real receiver_turn_time(Real v_r, int j) {
    const Real one = 1;
    const Real rho = (one + v_r) / (one - v_r);
    return pow_int(rho, j) / v_r;
}

Point receiver_turning_point(Real v_r, int j) {
    const Real one = 1;
    const Real rho = (one + v_r) / (one - v_r);
    const Real mag = pow_int(rho, j);
    const Real d = (j % 2 == 0) ? mag : -mag;
    return {d, mag / v_r};
}

Point right_sender_turning_point(Real v_r, int j) {
    const Real one = 1;
    const Real tr = receiver_turn_time(v_r, j);
    const bool even = (j % 2) == 0;
    const Real d = v_r * tr * (even ? (3 - v_r) / (one - v_r) : (one - v_r) / (one + v_r));
    const Real t = tr * (even ? (one + v_r) / (one - v_r) : (one + 3 * v_r) / (one + v_r));
    return {d, t};
}

Point left_sender_turning_point(Real v_r, int j) {
    const Real one = 1;
    const Real tr = receiver_turn_time(v_r, j + 1);
    const bool even = (j % 2) == 0;
    const Real d = -v_r * tr * (even ? (3 - v_r) / (one - v_r) : (one - v_r) / (one + v_r));
    const Real t = tr * (even ? (one + v_r) / (one - v_r) : (one + 3 * v_r) / (one + v_r));
    return {d, t};
}

namespace {

struct QuadRays {
    int side;
    Real v0, v1, gamma;
};

QuadRays plan_params(PlanPath which, Real v_r) {
    const Real one = 1;
    if (which == PlanPath::Receiver) return {1, v_r, -v_r, one};
    QuadRays q;
    q.side = which == PlanPath::LeftSender ? -1 : 1;
    q.v0 = v_r * (3 - v_r) / (one + v_r);
    q.v1 = v_r * (one - v_r) / (one + 3 * v_r);
    q.gamma = (3 - v_r) / (one - v_r);
    if (which == PlanPath::LeftSender) q.gamma *= (one + v_r) / (one - v_r);
    return q;
}

}  // namespace

std::vector<Point> plan_polyline(PlanPath which, Real v_r, int j_max) {
    const QuadRays q = plan_params(which, v_r);
    std::vector<Point> verts;
    verts.push_back({0, 0});
    verts.push_back({q.side * q.gamma, q.gamma});
    auto tps = rays_turning_points(q.side, q.v0, q.v1, q.gamma, j_max);
    verts.insert(verts.end(), tps.begin(), tps.end());
    return verts;
}

std::vector<Point> plan_polyline_stepped(PlanPath which, Real v_r, Real horizon) {
    const QuadRays q = plan_params(which, v_r);
    return rays_polyline(q.side, q.v0, q.v1, q.gamma, horizon);
}

}  // namespace evacline::quad
