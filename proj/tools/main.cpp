#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "evacline/analysis.hpp"
#include "evacline/bounds.hpp"
#include "evacline/engine.hpp"
#include "evacline/io.hpp"
#include "evacline/plans.hpp"
#include "evacline/rays.hpp"

namespace {

using nlohmann::json;
using namespace evacline;

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitNumeric = 3;

struct Options {
    std::string algo = "one-one";
    std::optional<double> v_r;
    bool optimal = false;
    int n_r = 2;
    int n_s = 2;
    int k_max = 12;
    int sweep_k_max = 10;
    double target = 0.0;
    double grid_min = 1.01;
    double grid_max = 100.0;
    int grid_points = 200;
    double tolerance = 1e-10;
    int j_max = 8;
    std::string format;
    std::string out_path;
    std::string trace_path;
    bool dump_plan = false;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

double resolve_vr(const Options& opt) {
    if (opt.optimal) return optimize_vr(opt.tolerance).v_r;
    if (!opt.v_r) throw CLI::ValidationError("--algo rays requires --vr or --optimal");
    return *opt.v_r;
}

EvacPlan build_plan(const Options& opt) {
    if (opt.algo == "one-one") return plan_one_one();
    if (opt.algo == "one-many") return plan_one_many(opt.n_r);
    if (opt.algo == "rays") return plan_evac_rays(resolve_vr(opt), opt.n_s, opt.k_max);
    throw CLI::ValidationError("unknown algorithm: " + opt.algo);
}

int cmd_simulate(const Options& opt) {
    EvacPlan plan = build_plan(opt);
    if (opt.dump_plan) {
        emit(to_json(plan).dump(2) + "\n", opt.out_path);
        return kExitOk;
    }
    EvacOutcome outcome = simulate(plan, opt.target);
    if (opt.format == "csv") {
        std::string csv = "target,finder,discovery_time,evac_time,ratio\n";
        csv += format_double(outcome.target) + "," + outcome.finder_id + "," +
               format_double(outcome.discovery_time) + "," + format_double(outcome.evac_time) +
               "," + format_double(outcome.evac_time / std::abs(outcome.target)) + "\n";
        emit(csv, opt.out_path);
    } else {
        json j = to_json(outcome);
        j["plan"] = plan.name;
        j["params"] = plan.params;
        emit(j.dump(2) + "\n", opt.out_path);
    }
    if (!opt.trace_path.empty()) emit(trace_csv(outcome), opt.trace_path);
    return kExitOk;
}

int cmd_sweep(const Options& opt, bool grid_overridden) {
    EvacPlan plan = build_plan(opt);
    std::vector<double> targets;
    std::string grid_desc;
    if (plan.name == "rays" && !grid_overridden) {
        targets = default_sweep_targets(plan, opt.grid_min, opt.grid_max, opt.grid_points,
                                        opt.sweep_k_max);
        grid_desc = "regime geometric grid, " + std::to_string(opt.grid_points) +
                    " points per side, k <= " + std::to_string(opt.sweep_k_max) +
                    ", plus boundary targets offset by 1e-7";
    } else if (plan.name == "rays") {
        for (double m : geometric_grid(opt.grid_min, opt.grid_max, opt.grid_points)) {
            targets.push_back(m);
            targets.push_back(-m);
        }
        grid_desc = "geometric grid [" + format_double(opt.grid_min) + ", " +
                    format_double(opt.grid_max) + "], " + std::to_string(opt.grid_points) +
                    " points per sign";
    } else {
        targets = default_sweep_targets(plan, opt.grid_min, opt.grid_max, opt.grid_points);
        grid_desc = "geometric grid [" + format_double(opt.grid_min) + ", " +
                    format_double(opt.grid_max) + "], " + std::to_string(opt.grid_points) +
                    " points per sign";
    }
    CrReport report = cr_sweep(plan, targets, plan_cr_bound(plan), grid_desc);
    if (opt.format == "json") {
        emit(to_json(report).dump(2) + "\n", opt.out_path);
    } else {
        emit(sweep_csv(report), opt.out_path);
    }
    return kExitOk;
}

int cmd_optimize_vr(const Options& opt) {
    VrOptimum best = optimize_vr(opt.tolerance);
    const double residual = rays_quartic_residual(best.v_r);
    if (opt.format == "json") {
        json j = {{"schema", kSchemaVersion},
                  {"v_r", best.v_r},
                  {"cr", best.cr},
                  {"quartic_residual", residual}};
        emit(j.dump(2) + "\n", opt.out_path);
    } else {
        std::string text = "v_r = " + format_double(best.v_r) + "\n" +
                           "cr  = " + format_double(best.cr) + "\n" +
                           "quartic residual = " + format_double(residual) + "\n";
        emit(text, opt.out_path);
    }
    return kExitOk;
}

int cmd_lower_bounds(const Options& opt) {
    struct Row {
        const char* name;
        double expected;
        double computed;
    };
    const Optimum1D g = minimize_lb_equal_drift();
    const Optimum1D h = minimize_lb_pair();
    const Optimum1D q = solve_lb_one_many();
    const Row rows[] = {
        {"single-sender-equal-drift", 9.0, 1.0 + g.value},
        {"one-sender-one-receiver", 3.0 + 2.0 * std::sqrt(2.0), 1.0 + h.value},
        {"one-sender-many-receivers", 2.0 + std::sqrt(5.0), q.value},
    };
    if (opt.format == "json") {
        json arr = json::array();
        for (const Row& r : rows) {
            arr.push_back({{"name", r.name},
                           {"expected", r.expected},
                           {"computed", r.computed},
                           {"abs_diff", std::abs(r.computed - r.expected)}});
        }
        emit(json{{"schema", kSchemaVersion}, {"bounds", arr}}.dump(2) + "\n", opt.out_path);
    } else {
        std::string text = "bound                        expected        computed        |difference|\n";
        char line[160];
        for (const Row& r : rows) {
            std::snprintf(line, sizeof(line), "%-28s %-15.10f %-15.10f %.3e\n", r.name,
                          r.expected, r.computed, std::abs(r.computed - r.expected));
            text += line;
        }
        emit(text, opt.out_path);
    }
    return kExitOk;
}

int cmd_turning_points(const Options& opt) {
    const double v_r = resolve_vr(opt);
    struct Family {
        const char* name;
        Trajectory (*stepped)(double, double);
        TurningPoint (*closed)(double, int);
    };
    const Family families[] = {
        {"receiver", receiver_trajectory, receiver_turning_point},
        {"right-sender", right_sender_trajectory, right_sender_turning_point},
        {"left-sender", left_sender_trajectory, left_sender_turning_point},
    };

    double max_dev = 0.0;
    json fam_json = json::array();
    std::string text = "family,j,closed_position,closed_time,simulated_position,simulated_time\n";
    for (const Family& f : families) {
        const TurningPoint last = f.closed(v_r, opt.j_max);
        const Trajectory stepped = f.stepped(v_r, last.time * 1.5);
        const auto& verts = stepped.vertices();
        json closed_arr = json::array();
        json sim_arr = json::array();
        for (int j = 0; j <= opt.j_max; ++j) {
            const TurningPoint want = f.closed(v_r, j);
            const TurningPoint got = verts.at(static_cast<std::size_t>(j) + 2);
            max_dev = std::max({max_dev, std::abs(want.position - got.position),
                                std::abs(want.time - got.time)});
            closed_arr.push_back({want.position, want.time});
            sim_arr.push_back({got.position, got.time});
            text += std::string(f.name) + "," + std::to_string(j) + "," +
                    format_double(want.position) + "," + format_double(want.time) + "," +
                    format_double(got.position) + "," + format_double(got.time) + "\n";
        }
        fam_json.push_back(
            {{"name", f.name}, {"closed_form", closed_arr}, {"simulated", sim_arr}});
    }
    text += "max_deviation," + format_double(max_dev) + "\n";
    if (opt.format == "json") {
        json j = {{"schema", kSchemaVersion},
                  {"v_r", v_r},
                  {"j_max", opt.j_max},
                  {"families", fam_json},
                  {"max_deviation", max_dev}};
        emit(j.dump(2) + "\n", opt.out_path);
    } else {
        emit(text, opt.out_path);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear-evacuation simulator and competitive-ratio analysis"};
    app.require_subcommand(1);

    Options opt;

    auto add_plan_flags = [&](CLI::App* cmd) {
        cmd->add_option("--algo", opt.algo, "Algorithm: one-one, one-many, rays")
            ->check(CLI::IsMember({"one-one", "one-many", "rays"}));
        cmd->add_option("--vr", opt.v_r, "Receiver speed for the rays plan (0 < v_r < 1)");
        cmd->add_flag("--optimal", opt.optimal, "Use the optimized receiver speed");
        cmd->add_option("--nr", opt.n_r, "Receiver count for one-many (>= 2)");
        cmd->add_option("--ns", opt.n_s, "Sender count for rays (>= 2)");
        cmd->add_option("--kmax", opt.k_max, "Coverage index of the rays baselines");
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", opt.out_path, "Write output to this file instead of stdout");
    };

    CLI::App* sim = app.add_subcommand("simulate", "Evacuate against a single target");
    add_plan_flags(sim);
    CLI::Option* target_opt = sim->add_option("--target", opt.target, "Target location (|x| >= 1)");
    sim->add_option("--trace", opt.trace_path, "Write the event trace CSV to this file ('-' = stdout)");
    sim->add_flag("--dump-plan", opt.dump_plan, "Print the plan JSON instead of simulating");

    CLI::App* sweep = app.add_subcommand("sweep", "Adversarial target sweep with ratio report");
    add_plan_flags(sweep);
    CLI::Option* gmin = sweep->add_option("--grid-min", opt.grid_min, "Smallest |x| in the grid");
    CLI::Option* gmax = sweep->add_option("--grid-max", opt.grid_max, "Largest |x| in the grid");
    sweep->add_option("--grid-points", opt.grid_points, "Grid points per sign");
    sweep->add_option("--sweep-kmax", opt.sweep_k_max,
                      "Outermost regime index swept for the rays plan");

    CLI::App* optv = app.add_subcommand("optimize-vr", "Optimize the rays receiver speed");
    optv->add_option("--tolerance", opt.tolerance, "Bisection tolerance");
    optv->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    optv->add_option("--out", opt.out_path, "Write output to this file instead of stdout");

    CLI::App* lb = app.add_subcommand("lower-bounds", "Evaluate the lower-bound constants");
    lb->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    lb->add_option("--out", opt.out_path, "Write output to this file instead of stdout");

    CLI::App* tp = app.add_subcommand("turning-points",
                                      "Closed-form vs simulated rays turning points");
    tp->add_option("--vr", opt.v_r, "Receiver speed (0 < v_r < 1)");
    tp->add_flag("--optimal", opt.optimal, "Use the optimized receiver speed");
    tp->add_option("--jmax", opt.j_max, "Largest turning-point index");
    tp->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    tp->add_option("--out", opt.out_path, "Write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        if (sim->parsed()) {
            if (!opt.dump_plan && target_opt->count() == 0) {
                std::fprintf(stderr, "simulate requires --target\n");
                return kExitBadArgs;
            }
            return cmd_simulate(opt);
        }
        if (sweep->parsed()) {
            return cmd_sweep(opt, gmin->count() > 0 || gmax->count() > 0);
        }
        if (optv->parsed()) return cmd_optimize_vr(opt);
        if (lb->parsed()) return cmd_lower_bounds(opt);
        if (tp->parsed()) return cmd_turning_points(opt);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitBadArgs;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitBadArgs;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitNumeric;
    }
    return kExitOk;
}
