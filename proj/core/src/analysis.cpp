#include "evacline/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "evacline/engine.hpp"
#include "evacline/rays.hpp"

namespace evacline {

double rays_cr_bound(double v_r) {
    if (!(v_r > 0.0) || !(v_r < 1.0)) {
        throw std::domain_error("rays_cr_bound: v_r must lie in (0, 1)");
    }
    return 1.0 + (1.0 + v_r) / (1.0 - v_r) *
                     ((1.0 + 4.0 * v_r - v_r * v_r) / (v_r * (3.0 - v_r)));
}

double rays_quartic_residual(double v_r) {
    const double v2 = v_r * v_r;
    return v2 * v2 - 16.0 * v2 * v_r + 26.0 * v2 + 8.0 * v_r - 3.0;
}

VrOptimum optimize_vr(double tolerance) {
    if (!(tolerance > 0.0)) throw std::domain_error("optimize_vr: tolerance must be positive");

    double lo = 1e-6, hi = 1.0 - 1e-6;
    double flo = rays_quartic_residual(lo);
    if (flo >= 0.0 || rays_quartic_residual(hi) <= 0.0) {
        throw std::runtime_error("optimize_vr: bisection bracket lost");
    }
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        const double fm = rays_quartic_residual(mid);
        if (fm < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    const double root = 0.5 * (lo + hi);

    // The residual is the numerator of the bound's derivative; confirm that
    // against central finite differences away from the root.
    const double h = 1e-6;
    for (double v : {0.1, 0.2, 1.0 / 3.0, 0.4, 0.5}) {
        const double fd = (rays_cr_bound(v + h) - rays_cr_bound(v - h)) / (2.0 * h);
        const double denom = v * v * (3.0 - v) * (3.0 - v) * (1.0 - v) * (1.0 - v);
        const double analytic = rays_quartic_residual(v) / denom;
        if (std::abs(fd - analytic) > 1e-5 * std::abs(analytic)) {
            throw std::runtime_error("optimize_vr: derivative identity cross-check failed");
        }
    }
    return {root, rays_cr_bound(root)};
}

std::vector<double> critical_targets(double v_r, int k_max) {
    if (k_max < 0) throw std::invalid_argument("critical_targets: k_max must be >= 0");
    constexpr double kOffset = 1.0 + 1e-7;
    std::vector<double> out;
    out.reserve(2 * static_cast<std::size_t>(k_max) + 2);
    for (int k = 0; k <= k_max; ++k) {
        out.push_back(right_sender_turning_point(v_r, 2 * k).position * kOffset);
        out.push_back(left_sender_turning_point(v_r, 2 * k).position * kOffset);
    }
    return out;
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("geometric_grid: need 0 < lo < hi");
    if (points < 2) throw std::invalid_argument("geometric_grid: need at least 2 points");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    const double step = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i) {
        out.push_back(lo * std::exp(step * i));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<double> default_sweep_targets(const EvacPlan& plan, double lo, double hi, int points,
                                          int k_max) {
    std::vector<double> targets;
    if (plan.name == "rays") {
        const double v_r = plan.params.at("v_r");
        constexpr double kOffset = 1.0 + 1e-7;
        const double right_lo = right_sender_turning_point(v_r, 0).position * kOffset;
        const double right_hi = right_sender_turning_point(v_r, 2 * k_max).position;
        const double left_lo = -left_sender_turning_point(v_r, 0).position * kOffset;
        const double left_hi = -left_sender_turning_point(v_r, 2 * k_max).position;
        for (double m : geometric_grid(right_lo, right_hi, points)) targets.push_back(m);
        for (double m : geometric_grid(left_lo, left_hi, points)) targets.push_back(-m);
        for (double c : critical_targets(v_r, k_max)) targets.push_back(c);
    } else {
        for (double m : geometric_grid(lo, hi, points)) {
            targets.push_back(m);
            targets.push_back(-m);
        }
    }
    std::sort(targets.begin(), targets.end());
    return targets;
}

CrReport cr_sweep(const EvacPlan& plan, const std::vector<double>& targets,
                  std::optional<double> analytic_bound, std::string grid_desc) {
    if (targets.empty()) throw std::invalid_argument("cr_sweep: empty target list");
    CrReport report;
    report.plan_name = plan.name;
    report.params = plan.params;
    report.grid_desc = std::move(grid_desc);
    report.analytic_bound = analytic_bound;

    std::vector<double> sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    report.records.reserve(sorted.size());

    double sup = -1.0;
    double witness = 0.0;
    for (double x : sorted) {
        const EvacOutcome outcome = simulate(plan, x);
        const double ratio = outcome.evac_time / std::abs(x);
        report.records.push_back({x, outcome.evac_time, ratio});
        if (ratio > sup) {
            sup = ratio;
            witness = x;
        }
    }
    report.empirical_sup = sup;
    report.sup_witness_x = witness;
    return report;
}

std::optional<double> plan_cr_bound(const EvacPlan& plan) {
    if (plan.name == "one-one") return 3.0 + 2.0 * std::sqrt(2.0);
    if (plan.name == "one-many") return 5.0;
    if (plan.name == "rays") return rays_cr_bound(plan.params.at("v_r"));
    return std::nullopt;
}

}  // namespace evacline
