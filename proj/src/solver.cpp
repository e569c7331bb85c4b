#include "armik/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "armik/pose_angles.hpp"

namespace armik {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kGoldenTol = 1e-6;

double circular_diff(double a, double b) {
    double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

/// Squared joint-angle distance between two solutions; the roll joint is
/// compared on the circle, hand joints only when both sides have them.
double joint_distance2(const JointSolution& a, const JointSolution& b) {
    double sum = 0.0;
    auto add = [&sum](double x) { sum += x * x; };
    add(a.ang_hombro_z - b.ang_hombro_z);
    add(a.ang_hombro_x - b.ang_hombro_x);
    add(circular_diff(a.t, b.t));
    add(a.ang_codo - b.ang_codo);
    if (a.hand && b.hand) {
        add(a.hand->wrist_roll_total - b.hand->wrist_roll_total);
        add(a.hand->hand_flex - b.hand->hand_flex);
    }
    add(a.gripper - b.gripper);
    return sum;
}

struct Candidate {
    double t;
    double distance2;
};

/// Uniform grid over the arc set plus the golden-section refinement of
/// the best bracket; returned sorted by distance, refined point first.
std::vector<Candidate> nearest_candidates(const RedundancyCircle& circle,
                                          const WristPoint& wrist,
                                          const ArmGeometry& geom,
                                          const JointSolution& current,
                                          const std::optional<TargetPose>& hand_target,
                                          int samples) {
    const auto objective = [&](double t) {
        return joint_distance2(
            extract_solution(t, wrist, circle, geom, hand_target, current.gripper),
            current);
    };

    const FeasibleArc& arc = circle.feasible_arc;
    std::vector<ArcInterval> pieces = arc.merged_arcs();
    const double total = arc.total_length();

    std::vector<Candidate> grid;
    double best_lo = 0.0, best_hi = 0.0;
    double best_val = std::numeric_limits<double>::infinity();
    for (const ArcInterval& piece : pieces) {
        int n = std::max(2, static_cast<int>(std::ceil(
                                samples * piece.length / std::max(total, 1e-12))) +
                                1);
        if (piece.length <= kGoldenTol) n = 2;
        const double step = piece.length / (n - 1);
        for (int i = 0; i < n; ++i) {
            const double t = piece.start + step * i;
            const double v = objective(t);
            grid.push_back({t, v});
            if (v < best_val) {
                best_val = v;
                best_lo = std::max(piece.start, t - step);
                best_hi = std::min(piece.start + piece.length, t + step);
            }
        }
    }

    // Golden-section refinement inside the best bracket.
    double a = best_lo, b = best_hi;
    constexpr double invphi = 0.6180339887498949;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = objective(c), fd = objective(d);
    while (b - a > kGoldenTol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = objective(d);
        }
    }
    const double refined = (a + b) / 2.0;

    // Wrap-merged arcs run past 2pi; normalize before handing back.
    const auto wrap = [](Candidate c) {
        c.t = std::fmod(c.t, kTwoPi);
        if (c.t < 0.0) c.t += kTwoPi;
        return c;
    };
    std::vector<Candidate> out;
    out.push_back(wrap({refined, objective(refined)}));
    std::sort(grid.begin(), grid.end(),
              [](const Candidate& x, const Candidate& y) { return x.distance2 < y.distance2; });
    for (const Candidate& c : grid) out.push_back(wrap(c));
    return out;
}

}  // namespace

const char* solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::solved: return "solved";
        case SolveStatus::infeasible: return "infeasible";
        case SolveStatus::out_of_limits: return "out_of_limits";
    }
    return "unknown";
}

const char* fail_reason_name(FailReason r) {
    switch (r) {
        case FailReason::none: return "none";
        case FailReason::bad_request: return "bad_request";
        case FailReason::degenerate_input: return "degenerate_input";
        case FailReason::too_far: return "too_far";
        case FailReason::too_close: return "too_close";
        case FailReason::wrist_at_shoulder: return "wrist_at_shoulder";
        case FailReason::no_valid_elbow: return "no_valid_elbow";
        case FailReason::policy_violation: return "policy_violation";
    }
    return "unknown";
}

std::vector<LimitViolation> validate_limits(const JointSolution& solution,
                                            const JointLimits& limits) {
    std::vector<LimitViolation> violations;
    for (Joint j : all_joints()) {
        const std::optional<double> value = joint_value(solution, j);
        if (!value) continue;
        const Interval& iv = limits[j];
        if (!iv.contains(*value)) violations.push_back({j, *value, iv});
    }
    return violations;
}

JointSolution extract_solution(double t, const WristPoint& wrist,
                               const RedundancyCircle& circle, const ArmGeometry& geom,
                               const std::optional<TargetPose>& hand_target,
                               double gripper) {
    JointSolution sol;
    sol.t = t;
    sol.gripper = gripper;
    sol.circle = circle;
    sol.wrist = wrist.m;
    sol.elbow = point_at(circle, t);

    const ShoulderAngles sh = shoulder_angles(sol.elbow, geom);
    sol.ang_hombro_z = sh.ang_hombro_z;
    sol.ang_hombro_x = sh.ang_hombro_x;
    sol.elbow_y_negative = sh.elbow_y_negative;
    sol.elbow_z_negative = sh.elbow_z_negative;

    sol.ang_codo = elbow_angle(wrist.m, circle, geom).ang_codo;

    // Polar-branch flag for the wrist reconstruction: which sign of
    // arccos recovers the wrist's polar angle from the elbow height.
    const double mlen = norm(wrist.m);
    const double theta = std::acos(std::max(-1.0, std::min(1.0, wrist.m.z / mlen)));
    const double delta = std::atan2(circle.radius * std::sin(t), circle.beta * mlen);
    sol.wrist_branch = std::sin(theta + delta) >= 0.0 ? +1 : -1;

    if (hand_target) {
        HandResult hand;
        hand.ang_muneca = hand_target->ang_muneca;
        hand.ang_mano = hand_target->ang_mano;
        try {
            const Plane plane = hand_plane(ArmGeometry::shoulder_origin(), sol.elbow,
                                           circle.center);
            const WristRoll roll = wrist_roll(hand_target->tip, wrist.m, plane);
            hand.plane = plane;
            hand.alpha = roll.alpha;
            hand.wrist_roll_total = roll.total;
        } catch (const DegenerateHandPlane&) {
            // Straight arm: any roll reaches the tip; report the mount
            // offset alone.
            hand.roll_free = true;
            hand.alpha = 0.0;
            hand.wrist_roll_total = kPi / 2.0;
        }
        hand.hand_flex = hand_flex(sol.elbow, wrist.m, hand_target->tip);
        sol.hand = hand;
    }
    return sol;
}

double select_elbow(const RedundancyCircle& circle, const WristPoint& wrist,
                    const ArmGeometry& geom, const ElbowPolicy& policy,
                    const std::optional<JointSolution>& current,
                    const std::optional<TargetPose>& hand_target, int samples) {
    const FeasibleArc& arc = circle.feasible_arc;
    if (arc.is_empty())
        throw PolicyViolation("select_elbow: feasible arc is empty");
    switch (policy.kind) {
        case ElbowPolicyKind::fixed_t:
            if (!arc.contains(policy.fixed_t, 1e-9))
                throw PolicyViolation("select_elbow: fixed t outside the feasible arc");
            return policy.fixed_t;
        case ElbowPolicyKind::mid_arc:
            return arc.midpoint();
        case ElbowPolicyKind::nearest_to_current: {
            if (!current)
                throw PolicyViolation("select_elbow: nearest policy needs a current pose");
            return nearest_candidates(circle, wrist, geom, *current, hand_target, samples)
                .front()
                .t;
        }
    }
    throw PolicyViolation("select_elbow: unknown policy");
}

SolveReport solve(const SolveRequest& request, const ArmGeometry& geom,
                  const JointLimits& limits) {
    SolveReport report;

    if (!request.target && !request.wrist) {
        report.reason = FailReason::bad_request;
        return report;
    }

    // The hand-orientation inputs must respect the wrist/hand joint limits.
    if (request.target) {
        if (!limits[Joint::muneca].contains(request.target->ang_muneca))
            report.violations.push_back(
                {Joint::muneca, request.target->ang_muneca, limits[Joint::muneca]});
        if (!limits[Joint::mano].contains(request.target->ang_mano))
            report.violations.push_back(
                {Joint::mano, request.target->ang_mano, limits[Joint::mano]});
        if (!report.violations.empty()) {
            report.status = SolveStatus::out_of_limits;
            return report;
        }
    }

    WristPoint wrist;
    try {
        if (request.wrist) {
            if (!is_finite(*request.wrist))
                throw DegenerateInput("solve: non-finite wrist");
            wrist = {*request.wrist, request.target};
        } else {
            wrist = wrist_from_target(*request.target, geom);
        }
    } catch (const DegenerateInput&) {
        report.reason = FailReason::degenerate_input;
        return report;
    }

    const Reachability reach = classify_reachability(wrist.m, geom);
    report.reachability = reach;
    switch (reach) {
        case Reachability::too_far: report.reason = FailReason::too_far; return report;
        case Reachability::too_close: report.reason = FailReason::too_close; return report;
        case Reachability::wrist_at_shoulder:
            report.reason = FailReason::wrist_at_shoulder;
            return report;
        default: break;
    }

    RedundancyCircle circle = make_circle(wrist, geom);
    ArcConstraints constraints;
    constraints.body = request.body_constraint;
    circle.feasible_arc = feasible_arc(circle, constraints);
    report.circle = circle;

    if (circle.feasible_arc.is_empty()) {
        report.reason = FailReason::no_valid_elbow;
        return report;
    }

    const double gripper = request.current ? request.current->gripper : 0.0;
    try {
        if (request.policy.kind == ElbowPolicyKind::nearest_to_current) {
            if (!request.current)
                throw PolicyViolation("solve: nearest policy needs a current pose");
            // Walk candidates by joint distance and keep the first within
            // limits; fall back to the nearest one if none passes.
            const auto candidates =
                nearest_candidates(circle, wrist, geom, *request.current, request.target,
                                   request.nearest_samples);
            std::optional<JointSolution> nearest_sol;
            std::vector<LimitViolation> nearest_violations;
            for (const Candidate& cand : candidates) {
                JointSolution sol = extract_solution(cand.t, wrist, circle, geom,
                                                     request.target, gripper);
                auto violations = validate_limits(sol, limits);
                if (violations.empty()) {
                    report.status = SolveStatus::solved;
                    report.solution = std::move(sol);
                    return report;
                }
                if (!nearest_sol) {
                    nearest_sol = std::move(sol);
                    nearest_violations = std::move(violations);
                }
            }
            report.status = SolveStatus::out_of_limits;
            report.solution = std::move(nearest_sol);
            report.violations = std::move(nearest_violations);
            return report;
        }

        const double t =
            select_elbow(circle, wrist, geom, request.policy, request.current,
                         request.target, request.nearest_samples);
        JointSolution sol = extract_solution(t, wrist, circle, geom, request.target, gripper);
        report.violations = validate_limits(sol, limits);
        report.solution = std::move(sol);
        report.status =
            report.violations.empty() ? SolveStatus::solved : SolveStatus::out_of_limits;
        return report;
    } catch (const PolicyViolation&) {
        report.reason = FailReason::policy_violation;
        return report;
    } catch (const DegenerateInput&) {
        report.reason = FailReason::degenerate_input;
        return report;
    }
}

}  // namespace armik
