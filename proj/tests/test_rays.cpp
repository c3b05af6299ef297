#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "evacline/rays.hpp"

using namespace evacline;

namespace {

// Small deterministic generator for property sampling.
struct Lcg {
    std::uint64_t state;
    double next() {  // uniform in [0, 1)
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<double>(state >> 11) * (1.0 / 9007199254740992.0);
    }
    double in(double lo, double hi) { return lo + (hi - lo) * next(); }
};

}  // namespace

TEST_SUITE_BEGIN("rays");

TEST_CASE("closed-form turning points of a right-drifting path") {
    // side +1, drift 2/3, return 1/9, offset 4
    auto tps = rays_turning_points({1, 2.0 / 3.0, 1.0 / 9.0, 4.0}, 2);
    REQUIRE(tps.size() == 3);
    CHECK(tps[0].position == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(tps[0].time == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(tps[1].position == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tps[1].time == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(tps[2].position == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(tps[2].time == doctest::Approx(24.0).epsilon(1e-12));
}

TEST_CASE("mirrored side reflects positions about the time axis") {
    auto tps = rays_turning_points({-1, 2.0 / 3.0, 1.0 / 9.0, 4.0}, 1);
    CHECK(tps[1].position == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(tps[1].time == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("receiver-shaped parameters reproduce the alternating form") {
    // drift 1/3, return -1/3, offset 1: position (-2)^j, time 3*2^j
    auto tps = rays_turning_points({1, 1.0 / 3.0, -1.0 / 3.0, 1.0}, 3);
    CHECK(tps[3].position == doctest::Approx(-8.0).epsilon(1e-12));
    CHECK(tps[3].time == doctest::Approx(24.0).epsilon(1e-12));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(rays_turning_points({1, 1.0, 0.5, 1.0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(rays_turning_points({1, 0.5, 0.0, 1.0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(rays_turning_points({1, 0.5, 0.6, 1.0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(rays_turning_points({2, 0.5, 0.1, 1.0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(rays_trajectory({1, 0.5, 0.1, -1.0}, 10.0), std::invalid_argument);
}

TEST_CASE("stepwise construction: receiver path prefix") {
    Trajectory traj = rays_trajectory({1, 1.0 / 3.0, -1.0 / 3.0, 1.0}, 7.0);
    const auto& v = traj.vertices();
    REQUIRE(v.size() >= 4);
    CHECK(v[0].position == 0.0);
    CHECK(v[1].position == doctest::Approx(1.0));
    CHECK(v[1].time == doctest::Approx(1.0));
    CHECK(v[2].position == doctest::Approx(1.0));
    CHECK(v[2].time == doctest::Approx(3.0));
    CHECK(v[3].position == doctest::Approx(-2.0));
    CHECK(v[3].time == doctest::Approx(6.0));
    // horizon 7 cuts the next swing at (-1, 7)
    CHECK(v.back().time == doctest::Approx(7.0));
    CHECK(v.back().position == doctest::Approx(-1.0));
}

TEST_CASE("stepwise construction: sender path and truncation") {
    Trajectory traj = rays_trajectory({1, 2.0 / 3.0, 1.0 / 9.0, 4.0}, 10.0);
    const auto& v = traj.vertices();
    // (0,0),(4,4),(4,6),(1,9),(2,10)
    REQUIRE(v.size() == 5);
    CHECK(v[2].position == doctest::Approx(4.0));
    CHECK(v[2].time == doctest::Approx(6.0));
    CHECK(v[3].position == doctest::Approx(1.0));
    CHECK(v[3].time == doctest::Approx(9.0));

    // A horizon inside the initial wait ends the path mid-wait.
    Trajectory cut = rays_trajectory({1, 2.0 / 3.0, 1.0 / 9.0, 4.0}, 5.0);
    CHECK(cut.vertices().back().position == doctest::Approx(4.0));
    CHECK(cut.vertices().back().time == doctest::Approx(5.0));
}

TEST_CASE("stepwise vertices coincide with the closed form") {
    // Sampled valid parameters, bounded so that turning points up to j = 20
    // stay within a range where the absolute 1e-9 comparison is meaningful.
    Lcg rng{0x5eed5eed5eedull};
    for (int trial = 0; trial < 30; ++trial) {
        RaysParams p;
        p.side = rng.next() < 0.5 ? 1 : -1;
        p.drift_speed = rng.in(0.1, 0.75);
        do {
            p.return_speed = rng.in(-0.75, p.drift_speed - 0.02);
        } while (std::abs(p.return_speed) < 0.02);
        p.start_offset = rng.in(0.2, 5.0);

        const int j_max = 20;
        auto closed = rays_turning_points(p, j_max);
        Trajectory stepped = rays_trajectory(p, closed.back().time + 1.0);
        const auto& v = stepped.vertices();
        REQUIRE(v.size() >= static_cast<std::size_t>(j_max) + 3);
        for (int j = 0; j <= j_max; ++j) {
            CAPTURE(trial);
            CAPTURE(j);
            CHECK(std::abs(v[j + 2].position - closed[j].position) <= 1e-9);
            CHECK(std::abs(v[j + 2].time - closed[j].time) <= 1e-9);
        }
    }
}

TEST_CASE("turning points sit on their bounce rays") {
    Lcg rng{0xabcdef12345ull};
    for (int trial = 0; trial < 10; ++trial) {
        RaysParams p{rng.next() < 0.5 ? 1 : -1, rng.in(0.2, 0.7), 0.0, rng.in(0.5, 3.0)};
        p.return_speed = rng.in(-0.7, -0.05);
        auto tps = rays_turning_points(p, 15);
        for (std::size_t j = 0; j < tps.size(); ++j) {
            const double expected = (j % 2 == 0 ? p.drift_speed : p.return_speed) * p.side;
            CHECK(tps[j].position / tps[j].time == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("plan-family turning points at v_r = 1/3") {
    const double vr = 1.0 / 3.0;
    TurningPoint r2 = receiver_turning_point(vr, 2);
    CHECK(r2.position == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(r2.time == doctest::Approx(12.0).epsilon(1e-12));

    TurningPoint s0 = right_sender_turning_point(vr, 0);
    TurningPoint s1 = right_sender_turning_point(vr, 1);
    CHECK(s0.position == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(s0.time == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(s1.position == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s1.time == doctest::Approx(9.0).epsilon(1e-12));

    TurningPoint l0 = left_sender_turning_point(vr, 0);
    CHECK(l0.position == doctest::Approx(-8.0).epsilon(1e-12));
    CHECK(l0.time == doctest::Approx(12.0).epsilon(1e-12));
    TurningPoint l1 = left_sender_turning_point(vr, 1);
    CHECK(l1.position == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(l1.time == doctest::Approx(18.0).epsilon(1e-12));

    CHECK_THROWS_AS(receiver_turning_point(1.2, 1), std::invalid_argument);
    CHECK_THROWS_AS(receiver_turning_point(0.0, 1), std::invalid_argument);
}

TEST_CASE("receiver turning-point recurrences") {
    for (double vr : {0.15, 0.228652, 1.0 / 3.0, 0.45}) {
        const double rho = (1.0 + vr) / (1.0 - vr);
        for (int j = 1; j <= 12; ++j) {
            TurningPoint prev = receiver_turning_point(vr, j - 1);
            TurningPoint cur = receiver_turning_point(vr, j);
            CHECK(cur.time == doctest::Approx(rho * prev.time).epsilon(1e-12));
            CHECK(cur.position == doctest::Approx(-rho * prev.position).epsilon(1e-12));
        }
    }
}

TEST_CASE("plan-family closed forms match the stepped trajectories") {
    for (double vr : {0.15, 0.228652, 1.0 / 3.0, 0.45}) {
        const int j_max = 20;

        struct Family {
            Trajectory (*stepped)(double, double);
            TurningPoint (*closed)(double, int);
        };
        const Family families[] = {
            {receiver_trajectory, receiver_turning_point},
            {right_sender_trajectory, right_sender_turning_point},
            {left_sender_trajectory, left_sender_turning_point},
        };
        for (const Family& f : families) {
            TurningPoint last = f.closed(vr, j_max);
            Trajectory stepped = f.stepped(vr, last.time * 1.5);
            const auto& v = stepped.vertices();
            REQUIRE(v.size() >= static_cast<std::size_t>(j_max) + 3);
            for (int j = 0; j <= j_max; ++j) {
                TurningPoint want = f.closed(vr, j);
                CAPTURE(vr);
                CAPTURE(j);
                CHECK(std::abs(v[j + 2].position - want.position) <= 1e-9);
                CHECK(std::abs(v[j + 2].time - want.time) <= 1e-9);
            }
        }
    }
}

TEST_SUITE_END();
