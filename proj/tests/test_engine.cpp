#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "evacline/engine.hpp"
#include "evacline/plans.hpp"
#include "evacline/rays.hpp"

using namespace evacline;

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kOneOneRatio = 3.0 + 2.0 * kSqrt2;
}  // namespace

TEST_SUITE_BEGIN("engine");

TEST_CASE("first_passage solves segments in closed form") {
    Trajectory recv = rays_trajectory({1, 1.0 / 3.0, -1.0 / 3.0, 1.0}, 100.0);
    auto t = first_passage(recv, -2.0, 100.0);
    REQUIRE(t.has_value());
    CHECK(*t == doctest::Approx(6.0).epsilon(1e-12));

    Trajectory sender({{0, 0}, {kSqrt2 - 1.0, 1.0}}, TerminalBehavior::ExtendLastVelocity);
    auto ts = first_passage(sender, 2.0, 1e4);
    REQUIRE(ts.has_value());
    CHECK(*ts == doctest::Approx(2.0 * (1.0 + kSqrt2)).epsilon(1e-12));

    Trajectory away({{0, 0}, {-1, 1}}, TerminalBehavior::ExtendLastVelocity);
    CHECK_FALSE(first_passage(away, 1.0, 1e4).has_value());

    // Reached, but only after the horizon.
    Trajectory slow({{0, 0}, {0.5, 1}}, TerminalBehavior::ExtendLastVelocity);
    CHECK_FALSE(first_passage(slow, 10.0, 19.0).has_value());
    CHECK(first_passage(slow, 10.0, 21.0).has_value());
}

TEST_CASE("intercept of an agent fleeing at full speed never happens") {
    Trajectory flee({{0, 0}, {-1, 1}}, TerminalBehavior::ExtendLastVelocity);
    CHECK_FALSE(intercept(1.0, 0.0, flee, 1e4).has_value());
}

TEST_CASE("intercept meets the returning far-side searcher at its turn") {
    Trajectory left = rays_trajectory({-1, 2.0 / 3.0, 1.0 / 9.0, 8.0}, 100.0);
    auto hit = intercept(4.0, 12.0, left, 100.0);
    REQUIRE(hit.has_value());
    CHECK(hit->first == doctest::Approx(18.0).epsilon(1e-9));
    CHECK(hit->second == doctest::Approx(-2.0).epsilon(1e-9));
}

TEST_CASE("intercept of a constant-velocity runner") {
    // Start at -x at time x, chase a runner at speed sqrt(2)-1: meeting at
    // time (2+sqrt(2)) x.
    const double x = 3.0;
    Trajectory runner({{0, 0}, {kSqrt2 - 1.0, 1.0}}, TerminalBehavior::ExtendLastVelocity);
    auto hit = intercept(-x, x, runner, 1e4);
    REQUIRE(hit.has_value());
    CHECK(hit->first == doctest::Approx((2.0 + kSqrt2) * x).epsilon(1e-9));

    // Already co-located: immediate meet.
    auto now = intercept(runner.position_at(5.0), 5.0, runner, 1e4);
    REQUIRE(now.has_value());
    CHECK(now->first == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("one-one evacuation on both sides") {
    EvacPlan plan = plan_one_one();
    EvacOutcome right = simulate(plan, 2.0);
    CHECK(right.finder_id == "sender");
    CHECK(right.evac_time == doctest::Approx(kOneOneRatio * 2.0).epsilon(1e-12));
    CHECK(right.discovery_time == doctest::Approx((1.0 + kSqrt2) * 2.0).epsilon(1e-12));

    EvacOutcome left = simulate(plan, -3.0);
    CHECK(left.finder_id == "receiver");
    CHECK(left.evac_time == doctest::Approx(kOneOneRatio * 3.0).epsilon(1e-9));

    CHECK_THROWS_AS(simulate(plan, 0.5), std::domain_error);
}

TEST_CASE("plans with ill-formed pursuit lists are rejected") {
    Trajectory right({{0, 0}, {1, 1}}, TerminalBehavior::ExtendLastVelocity);
    Trajectory left({{0, 0}, {-1, 1}}, TerminalBehavior::ExtendLastVelocity);
    EvacPlan plan;
    plan.name = "custom";
    plan.horizon = 1e4;
    plan.agents.push_back({"a", Capability::Sender, right,
                           ReactionPolicy::pursue_then_exit({"ghost"})});
    plan.agents.push_back({"b", Capability::Receiver, left, ReactionPolicy::go_to_exit()});
    CHECK_THROWS_AS(simulate(plan, 2.0), std::invalid_argument);

    plan.agents[0].reaction = ReactionPolicy::pursue_then_exit({"b"});  // b hears broadcasts
    CHECK_THROWS_AS(simulate(plan, 2.0), std::invalid_argument);
}

TEST_CASE("one-many evacuation is 5|x|") {
    EvacPlan plan = plan_one_many(2);
    EvacOutcome out = simulate(plan, -3.0);
    CHECK(out.finder_id == "receiver-left");
    CHECK(out.evac_time == doctest::Approx(15.0).epsilon(1e-9));
    // The far receiver is notified via the sender's broadcast at 2|x|.
    CHECK(out.notify_time.at("sender") == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(out.notify_time.at("receiver-right") == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(out.arrival_time.at("receiver-right") == doctest::Approx(15.0).epsilon(1e-9));

    // Idle extra receivers evacuate in 3|x| and never dominate.
    EvacPlan plan5 = plan_one_many(5);
    EvacOutcome out5 = simulate(plan5, 4.0);
    CHECK(out5.evac_time == doctest::Approx(20.0).epsilon(1e-9));
    CHECK(out5.arrival_time.at("receiver-3") == doctest::Approx(12.0).epsilon(1e-9));
}

TEST_CASE("rays evacuation trace at v_r = 1/3") {
    EvacPlan plan = plan_evac_rays(1.0 / 3.0);
    const double x = 4.000001;
    EvacOutcome out = simulate(plan, x);
    CHECK(out.finder_id == "sender-right");
    CHECK(out.discovery_time == doctest::Approx(x + 8.0).epsilon(1e-9));
    // Receiver heads for the far sender and meets it at its inner turn
    // (-2, 18); both reach the target together.
    CHECK(out.notify_time.at("sender-left") == doctest::Approx(18.0).epsilon(1e-7));
    CHECK(out.evac_time == doctest::Approx(x + 20.0).epsilon(1e-9));

    // Stationary senders are told face-to-face when the receiver's pursuit
    // leg crosses the origin at t = x + 12; they reach the target well
    // before the interception pair and never set the evacuation time.
    EvacPlan plan4 = plan_evac_rays(1.0 / 3.0, 4);
    EvacOutcome out4 = simulate(plan4, x);
    CHECK(out4.evac_time == doctest::Approx(x + 20.0).epsilon(1e-9));
    CHECK(out4.notify_time.at("sender-3") == doctest::Approx(x + 12.0).epsilon(1e-6));
    CHECK(out4.arrival_time.at("sender-3") == doctest::Approx(2.0 * x + 12.0).epsilon(1e-6));
}

TEST_CASE("rays case-2 targets: far sender already rides with the receiver") {
    EvacPlan plan = plan_evac_rays(1.0 / 3.0);
    // x = 12 sits in the first regime with discovery at t = 20, inside the
    // receiver/left-sender co-ride; everyone informed at once, E = 3x.
    EvacOutcome out = simulate(plan, 12.0);
    CHECK(out.discovery_time == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(out.notify_time.at("sender-left") == doctest::Approx(20.0).epsilon(1e-9));
    CHECK(out.evac_time == doctest::Approx(36.0).epsilon(1e-9));
}

TEST_CASE("analytic evacuation times") {
    EvacPlan one_one = plan_one_one();
    CHECK(analytic_evac_time(one_one, -3.0) ==
          doctest::Approx(kOneOneRatio * 3.0).epsilon(1e-12));

    EvacPlan one_many = plan_one_many(2);
    CHECK(analytic_evac_time(one_many, 7.0) == doctest::Approx(35.0).epsilon(1e-12));

    EvacPlan rays = plan_evac_rays(1.0 / 3.0);
    CHECK(analytic_evac_time(rays, 4.000001) == doctest::Approx(24.000001).epsilon(1e-12));
    CHECK(rays_analytic_evac_time(1.0 / 3.0, 12.0) == doctest::Approx(36.0).epsilon(1e-12));
    // Off-regime targets are rejected.
    CHECK_THROWS_AS(rays_analytic_evac_time(1.0 / 3.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(rays_analytic_evac_time(1.0 / 3.0, -5.0), std::domain_error);
    CHECK_THROWS_AS(analytic_evac_time(rays, 0.2), std::domain_error);
}

TEST_CASE("simulation matches the closed forms across the regimes") {
    for (double vr : {0.228652, 1.0 / 3.0, 0.45}) {
        EvacPlan plan = plan_evac_rays(vr, 2, 8);
        const double right_lo = right_sender_turning_point(vr, 0).position;
        const double right_hi = right_sender_turning_point(vr, 10).position;
        const double left_lo = -left_sender_turning_point(vr, 0).position;
        const double left_hi = -left_sender_turning_point(vr, 10).position;
        for (int i = 0; i < 60; ++i) {
            const double w = (i + 0.5) / 60.0;
            const double xr = right_lo * std::pow(right_hi / right_lo, w);
            const double xl = -left_lo * std::pow(left_hi / left_lo, w);
            for (double x : {xr, xl}) {
                CAPTURE(vr);
                CAPTURE(x);
                const double sim = simulate(plan, x).evac_time;
                const double formula = analytic_evac_time(plan, x);
                CHECK(std::abs(sim - formula) <= 1e-6 * formula);
            }
        }
    }
}

TEST_CASE("mirror symmetry of the analytic formula") {
    // A left-side target scaled by rho = (1+v)/(1-v) replays the right-side
    // evacuation one receiver turn later: E(-rho x) = rho E(x).
    for (double vr : {0.228652, 1.0 / 3.0, 0.45}) {
        const double rho = (1.0 + vr) / (1.0 - vr);
        const double lo = right_sender_turning_point(vr, 0).position;
        for (double mult : {1.0001, 1.3, 1.9, 2.2}) {
            const double x = lo * mult;
            CHECK(rays_analytic_evac_time(vr, -rho * x) ==
                  doctest::Approx(rho * rays_analytic_evac_time(vr, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("analytic cases agree at the regime's case boundary") {
    for (double vr : {0.15, 0.228652, 1.0 / 3.0, 0.45}) {
        const double c1 = (1.0 + 4.0 * vr - vr * vr) / (1.0 + vr);
        const double c2 = (1.0 - vr * (2.0 + 3.0 * vr)) / (1.0 + vr);
        for (int k = 0; k <= 6; ++k) {
            // Boundary target: discovery exactly when the receiver meets the
            // far sender.
            const double tr2 = receiver_turn_time(vr, 2 * k + 2);
            const double left_turn = (1.0 + 3.0 * vr) / (1.0 + vr) * tr2;
            const double x = left_turn - (1.0 + vr) * receiver_turn_time(vr, 2 * k + 1);
            const double case1 = x + c1 * tr2;
            const double case2 = 3.0 * x + c2 * tr2;
            CHECK(std::abs(case1 - case2) <= 1e-9 * std::max(1.0, std::abs(case1)));
        }
    }
}

TEST_CASE("near-origin rays targets fall back to generic pursuit") {
    // Targets between the origin and the first sender turning point are
    // outside the strategy's guarantee; the engine still resolves them.
    // With v_r = 1/3, x = 2: found at t = 2 on the right-sender's dash, the
    // receiver walks left and boards the waiting far sender at (-8, 11).
    EvacPlan plan = plan_evac_rays(1.0 / 3.0);
    EvacOutcome out = simulate(plan, 2.0);
    CHECK(out.discovery_time == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(out.notify_time.at("sender-left") == doctest::Approx(11.0).epsilon(1e-9));
    CHECK(out.evac_time == doctest::Approx(21.0).epsilon(1e-9));
}

TEST_CASE("wireless capability and baseline-following reactions") {
    Trajectory right({{0, 0}, {1, 1}}, TerminalBehavior::ExtendLastVelocity);
    Trajectory left({{0, 0}, {-1, 1}}, TerminalBehavior::ExtendLastVelocity);
    Trajectory slow({{0, 0}, {0.9, 1}}, TerminalBehavior::ExtendLastVelocity);

    // A wireless agent hears a sender's broadcast at any distance.
    EvacPlan hears;
    hears.name = "custom";
    hears.horizon = 1e4;
    hears.agents.push_back({"w", Capability::Wireless, right, ReactionPolicy::go_to_exit()});
    hears.agents.push_back({"s", Capability::Sender, left, ReactionPolicy::go_to_exit()});
    EvacOutcome a = simulate(hears, -3.0);
    CHECK(a.finder_id == "s");
    CHECK(a.notify_time.at("w") == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(a.arrival_time.at("w") == doctest::Approx(9.0).epsilon(1e-12));

    // A wireless finder broadcasts, and a baseline-following listener keeps
    // its assigned path, arriving at its first post-notice passage.
    EvacPlan follows;
    follows.name = "custom";
    follows.horizon = 1e4;
    follows.agents.push_back({"w", Capability::Wireless, right, ReactionPolicy::go_to_exit()});
    follows.agents.push_back(
        {"lagger", Capability::Receiver, slow, ReactionPolicy::follow_baseline()});
    EvacOutcome b = simulate(follows, 3.0);
    CHECK(b.finder_id == "w");
    CHECK(b.notify_time.at("lagger") == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(b.arrival_time.at("lagger") == doctest::Approx(3.0 / 0.9).epsilon(1e-12));
    CHECK(b.evac_time == doctest::Approx(3.0 / 0.9).epsilon(1e-12));
}

TEST_CASE("causality and feasibility of every outcome") {
    EvacPlan plans[] = {plan_one_one(), plan_one_many(3), plan_evac_rays(0.228652, 3)};
    const double targets[] = {-40.0, -7.5, -1.0, 1.0, 2.5, 19.0, 60.0};
    for (const EvacPlan& plan : plans) {
        for (double x : targets) {
            EvacOutcome out = simulate(plan, x);
            CHECK(out.evac_time >= std::abs(x));
            for (const auto& [id, notify] : out.notify_time) {
                CHECK(notify >= out.discovery_time - 1e-12);
                CHECK(out.arrival_time.at(id) >= notify - 1e-12);
            }
            for (const auto& [id, path] : out.realized_paths) {
                CHECK(validate_unit_speed(path));
            }
        }
    }
}

TEST_SUITE_END();
