#include <doctest.h>

#include "evacline/analysis.hpp"
#include "evacline/engine.hpp"
#include "evacline/io.hpp"
#include "evacline/plans.hpp"

using namespace evacline;

TEST_SUITE_BEGIN("io");

TEST_CASE("trajectory serializes as [position, time] pairs") {
    Trajectory traj({{0, 0}, {1, 1}, {1, 3}}, TerminalBehavior::HoldLastPosition);
    nlohmann::json j = to_json(traj);
    CHECK(j["turning_points"].size() == 3);
    CHECK(j["turning_points"][1][0] == 1.0);
    CHECK(j["turning_points"][1][1] == 1.0);
    CHECK(j["turning_points"][2][1] == 3.0);
    CHECK(j["terminal"] == "hold");
}

TEST_CASE("plan and outcome documents carry the schema stamp") {
    EvacPlan plan = plan_one_one();
    nlohmann::json pj = to_json(plan);
    CHECK(pj["schema"] == kSchemaVersion);
    CHECK(pj["name"] == "one-one");
    CHECK(pj["agents"].size() == 2);
    CHECK(pj["agents"][0]["capability"] == "sender");
    CHECK(pj["agents"][1]["reaction"]["kind"] == "pursue-then-exit");

    EvacOutcome outcome = simulate(plan, 2.0);
    nlohmann::json oj = to_json(outcome);
    CHECK(oj["schema"] == kSchemaVersion);
    CHECK(oj["finder"] == "sender");
    CHECK(oj["notify_times"].size() == 2);
    CHECK(oj["ratio"].get<double>() == doctest::Approx(outcome.evac_time / 2.0));
}

TEST_CASE("sweep CSV is ordered ascending with negatives first") {
    EvacPlan plan = plan_one_many(2);
    CrReport report = cr_sweep(plan, {2.0, -2.0, 5.0, -7.0}, plan_cr_bound(plan));
    std::string csv = sweep_csv(report);
    CHECK(csv.rfind("x,evac_time,ratio\n", 0) == 0);
    CHECK(csv.find("-7,") < csv.find("-2,"));
    CHECK(csv.find("-2,") < csv.find("\n2,"));
    nlohmann::json rj = to_json(report);
    CHECK(rj["records"].size() == 4);
    CHECK(rj["bound"] == 5.0);
    CHECK(rj["sup"].get<double>() == doctest::Approx(5.0));
}

TEST_CASE("trace CSV lists chronological events") {
    EvacOutcome outcome = simulate(plan_one_many(2), -3.0);
    std::string csv = trace_csv(outcome);
    CHECK(csv.rfind("time,agent,event,position\n", 0) == 0);
    CHECK(csv.find("discovery") != std::string::npos);
    CHECK(csv.find("wireless") != std::string::npos);
    CHECK(csv.find("f2f") != std::string::npos);
    CHECK(csv.find("arrival") != std::string::npos);
}

TEST_SUITE_END();
