#include "armik/fk_oracle.hpp"

#include <cmath>

#include "doctest.h"
#include "armik/solver.hpp"
#include "test_helpers.hpp"

using namespace armik;
using test::near;

namespace {

const ArmGeometry kGeom = test::reference_geometry();

SolveRequest worked_example_request() {
    SolveRequest request;
    request.wrist = test::reference_wrist();
    request.target = TargetPose{{3, 4, -3}, 0.0, 0.0};
    request.policy = ElbowPolicy::fixed(kPi);
    return request;
}

}  // namespace

TEST_CASE("fk reproduces the worked solution's witnesses") {
    const SolveReport report = solve(worked_example_request(), kGeom, JointLimits{});
    REQUIRE(report.status == SolveStatus::solved);
    const FkPose pose = fk(*report.solution, kGeom);
    CHECK(near(pose.elbow, {2.5607, 0.4393, -1.5}, 1e-4));
    CHECK(near(pose.elbow, report.solution->elbow, 1e-9));
    CHECK(near(pose.wrist, {3, 3, -3}, 1e-9));
}

TEST_CASE("zero tilt puts the elbow on the Z axis") {
    // With the elbow straight down the roll parameter must carry the
    // vertical component: codo = pi/3 pairs with t = pi/2 below (and the
    // mirrored t on the upper hemisphere). The wrist azimuth is genuinely
    // unobservable here, so only the elbow and the link lengths are
    // asserted.
    JointSolution s;
    s.ang_codo = kPi / 3;
    s.t = kPi / 2;
    s.hand = HandResult{};
    s.elbow_z_negative = true;
    {
        const FkPose pose = fk(s, kGeom);
        CHECK(near(pose.elbow, {0, 0, -3}, 1e-12));
        CHECK(std::abs(norm(pose.wrist - pose.elbow) - kGeom.d2) <= 1e-9);
        CHECK(std::abs(norm(pose.wrist) - 3.0) <= 1e-9);
    }
    s.t = 3 * kPi / 2;
    s.elbow_z_negative = false;
    {
        const FkPose pose = fk(s, kGeom);
        CHECK(near(pose.elbow, {0, 0, 3}, 1e-12));
        CHECK(std::abs(norm(pose.wrist - pose.elbow) - kGeom.d2) <= 1e-9);
    }
}

TEST_CASE("fk rejects an elbow inconsistent with codo and t") {
    // ang_hombro_z = 0 forces the elbow onto the Z axis, but t = 0 keeps
    // the elbow at the circle's horizontal axis: no wrist direction can
    // reconcile the two.
    JointSolution s;
    s.ang_codo = 2.0;
    s.t = 0.0;
    s.hand = HandResult{};
    CHECK_THROWS_AS(fk(s, kGeom), InternalInconsistency);
}

TEST_CASE("canonical rest pose at all-zero angles") {
    JointSolution s;
    s.hand = HandResult{};
    const FkPose pose = fk(s, kGeom);
    CHECK(near(pose.elbow, {0, 0, -3}, 1e-12));
    CHECK(near(pose.wrist, {0, 0, 0}, 1e-12));
    CHECK(near(pose.tip, {0, 0, -2}, 1e-12));
}

TEST_CASE("fk requires hand orientation and finite angles") {
    JointSolution s;
    CHECK_THROWS_AS(fk(s, kGeom), DegenerateInput);
    s.hand = HandResult{};
    s.ang_codo = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(fk(s, kGeom), DegenerateInput);
}

TEST_CASE("link lengths hold for any solved pose") {
    test::Rng rng(101);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        SolveRequest request;
        const Vec3 m = rng.reachable_wrist(kGeom, 0.05);
        request.wrist = m;
        request.target = TargetPose{m - Vec3{0, 0, kGeom.long_mano},
                                    rng.uniform(0.0, kPi), rng.uniform(0.0, kPi / 2)};
        request.policy = ElbowPolicy::mid();
        const SolveReport report = solve(request, kGeom, JointLimits{});
        if (report.status != SolveStatus::solved) continue;
        ++checked;
        const FkPose pose = fk(*report.solution, kGeom);
        CHECK(std::abs(norm(pose.elbow) - kGeom.d1) <= 1e-9);
        CHECK(std::abs(norm(pose.wrist - pose.elbow) - kGeom.d2) <= 1e-9);
        CHECK(std::abs(norm(pose.tip - pose.wrist) - kGeom.long_mano) <= 1e-9);
    }
    CHECK(checked > 150);
}

TEST_CASE("round trip: solve then fk recovers wrist, elbow and tip") {
    test::Rng rng(202);
    int solved = 0;
    for (int i = 0; i < 400; ++i) {
        const ArmGeometry geom = i % 2 == 0
                                     ? kGeom
                                     : ArmGeometry{rng.uniform(1.5, 4.0),
                                                   rng.uniform(1.5, 4.0), 2.0};
        // Full targets: wrist derived through the decoupling stage, so the
        // tip must round-trip as well.
        SolveRequest request;
        request.target = TargetPose{rng.unit_vector() * rng.uniform(0.2, 2.5),
                                    rng.uniform(0.0, kPi), rng.uniform(0.0, kPi / 2)};
        request.policy = i % 3 == 0 ? ElbowPolicy::fixed(rng.uniform(0.0, 2 * kPi))
                                    : ElbowPolicy::mid();
        JointLimits limits;
        limits[Joint::brazo_roll] = {0.0, 2 * kPi};  // full redundancy sweep
        const SolveReport report = solve(request, geom, limits);
        if (report.status != SolveStatus::solved) continue;
        ++solved;
        const FkPose pose = fk(*report.solution, geom);
        CHECK(near(pose.wrist, report.solution->wrist, 1e-9));
        CHECK(near(pose.elbow, report.solution->elbow, 1e-9));
        CHECK(near(pose.tip, request.target->tip, 1e-9));
    }
    CHECK(solved > 250);
}

TEST_CASE("both polar branches reconstruct") {
    const RedundancyCircle circle =
        make_circle(WristPoint::raw(test::reference_wrist()), kGeom);
    for (double t : {0.0, kPi / 2, kPi, 3 * kPi / 2, 5.1}) {
        const JointSolution sol = extract_solution(
            t, WristPoint::raw(test::reference_wrist()), circle, kGeom,
            TargetPose{{3, 4, -3}, 0.0, 0.0});
        const FkPose pose = fk(sol, kGeom);
        CHECK(near(pose.wrist, test::reference_wrist(), 1e-9));
        CHECK(near(pose.elbow, point_at(circle, t), 1e-9));
    }
}
