#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evacline/plans.hpp"

namespace evacline {

/// Upper bound on the competitive ratio of the rays plan:
/// 1 + (1+v_r)/(1-v_r) * (1+4v_r-v_r^2)/(v_r(3-v_r)), v_r in (0, 1).
double rays_cr_bound(double v_r);

/// Numerator of d/dv_r rays_cr_bound: v^4 - 16v^3 + 26v^2 + 8v - 3.
/// Its root in (0, 1) is the optimal receiver speed.
double rays_quartic_residual(double v_r);

struct VrOptimum {
    double v_r;
    double cr;
};

/// Bracketed bisection on the quartic residual over (0, 1), then evaluates
/// the bound at the root. Also cross-checks the derivative identity against
/// central finite differences at five interior points (step 1e-6, relative
/// error at most 1e-5); a failed cross-check throws std::runtime_error.
VrOptimum optimize_vr(double tolerance = 1e-10);

/// Signed targets just beyond each regime boundary, where the evacuation
/// ratio approaches its supremum: right-sender even turning positions
/// scaled by (1 + 1e-7), and their (negative) left-sender counterparts,
/// for k = 0..k_max.
std::vector<double> critical_targets(double v_r, int k_max);

/// Geometrically spaced values from lo to hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, int points);

/// Default adversarial grid for a plan. For one-one and one-many this is a
/// geometric grid of `points` magnitudes per sign over [lo, hi]. For the
/// rays plan the grid spans the analyzed regimes on each side (from just
/// above the first sender turning position out to turning point 2*k_max),
/// unioned with the critical targets; nearer targets are outside the
/// plan's guarantee and excluded by default.
std::vector<double> default_sweep_targets(const EvacPlan& plan, double lo = 1.01,
                                          double hi = 100.0, int points = 200,
                                          int k_max = 10);

struct CrRecord {
    double x;
    double evac_time;
    double ratio;
};

struct CrReport {
    std::string plan_name;
    std::map<std::string, double> params;
    std::string grid_desc;
    std::vector<CrRecord> records;  // ascending x (negatives first)
    double empirical_sup = 0.0;
    double sup_witness_x = 0.0;
    std::optional<double> analytic_bound;
};

/// Simulates every target, records the ratios, and reports the empirical
/// supremum with its witness. Ties in the supremum go to the smallest x.
CrReport cr_sweep(const EvacPlan& plan, const std::vector<double>& targets,
                  std::optional<double> analytic_bound = std::nullopt,
                  std::string grid_desc = {});

/// Bound to attach to a sweep of this plan (exact constants for one-one and
/// one-many, rays_cr_bound for the rays plan).
std::optional<double> plan_cr_bound(const EvacPlan& plan);

}  // namespace evacline
